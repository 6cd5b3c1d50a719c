/**
 * Render dispersion-error / dissipation curves from one or more harness
 * adr_*.csv sweeps (one curve pair per scheme).
 *
 * Usage: plot-spectral --out fig.svg [--title T] adr_scheme.csv...
 */

import { parseArgs } from "util";
import { render } from "../render.js";
import { fail } from "./common.js";

const { values, positionals } = parseArgs({
  options: {
    out: { type: "string" },
    title: { type: "string", default: "" },
  },
  allowPositionals: true,
});

if (!values.out || positionals.length === 0) {
  fail("usage: plot-spectral --out fig.svg [--title T] adr.csv...");
}

try {
  const out = render({
    kind: "spectral",
    inputs: positionals,
    output: values.out!,
    title: values.title,
  });
  console.log(`wrote ${out}`);
} catch (err) {
  fail(String(err));
}
