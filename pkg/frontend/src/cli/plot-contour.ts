/**
 * Render an equidistant-level contour figure from one harness *_field.csv.
 *
 * Usage: plot-contour --out fig.svg --levels 30 --min 0.2 --max 1.7 \
 *          [--column rho] [--title T] field.csv
 */

import { parseArgs } from "util";
import { render } from "../render.js";
import { fail } from "./common.js";

const { values, positionals } = parseArgs({
  options: {
    out: { type: "string" },
    levels: { type: "string" },
    min: { type: "string" },
    max: { type: "string" },
    column: { type: "string", default: "rho" },
    title: { type: "string", default: "" },
  },
  allowPositionals: true,
});

if (!values.out || !values.levels || !values.min || !values.max || positionals.length !== 1) {
  fail("usage: plot-contour --out fig.svg --levels N --min A --max B [--column rho] field.csv");
}

try {
  const out = render({
    kind: "contour",
    inputs: positionals,
    output: values.out!,
    title: values.title,
    column: values.column,
    levels: {
      count: Number(values.levels),
      min: Number(values.min),
      max: Number(values.max),
    },
  });
  console.log(`wrote ${out}`);
} catch (err) {
  fail(String(err));
}
