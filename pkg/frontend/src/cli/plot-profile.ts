/**
 * Render a 1D profile figure (shock tube / advected wave) from one or more
 * harness *_profile.csv files.
 *
 * Usage: plot-profile --out fig.svg [--title T] [--xlabel X] [--ylabel Y] csv...
 */

import { parseArgs } from "util";
import { render } from "../render.js";
import { fail } from "./common.js";

const { values, positionals } = parseArgs({
  options: {
    out: { type: "string" },
    title: { type: "string", default: "" },
    xlabel: { type: "string", default: "x" },
    ylabel: { type: "string", default: "" },
  },
  allowPositionals: true,
});

if (!values.out || positionals.length === 0) {
  fail("usage: plot-profile --out fig.svg [--title T] [--xlabel X] [--ylabel Y] profile.csv...");
}

try {
  const out = render({
    kind: "profile",
    inputs: positionals,
    output: values.out!,
    title: values.title,
    xLabel: values.xlabel,
    yLabel: values.ylabel,
  });
  console.log(`wrote ${out}`);
} catch (err) {
  fail(String(err));
}
