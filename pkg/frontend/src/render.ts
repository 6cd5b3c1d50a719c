/**
 * Figure rendering: dispatch a validated FigureSpec to the profile,
 * contour, or spectral renderer and write a deterministic SVG.
 */

import { writeFileSync } from "fs";
import { basename } from "path";

import { readCsv, CsvSchemaError, NumericTable } from "./csv.js";
import { isolines } from "./contour.js";
import { equidistantLevels, FigureSpec, validateSpec } from "./figure.js";
import { toStructuredField } from "./grid.js";
import { Extent, SvgFigure } from "./svg.js";

const PALETTE = ["#1f3bb3", "#c22f2f", "#1c7c3c", "#a05a00", "#6a2d9c", "#00697a"];

export function render(spec: FigureSpec): string {
  validateSpec(spec);
  let svg: string;
  if (spec.kind === "profile") svg = renderProfile(spec);
  else if (spec.kind === "contour") svg = renderContour(spec);
  else svg = renderSpectral(spec);
  writeFileSync(spec.output, svg);
  return spec.output;
}

function extentOf(xs: number[], ys: number[], padY = 0.05): Extent {
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  const pad = (yMax - yMin || 1) * padY;
  yMin -= pad;
  yMax += pad;
  return { xMin, xMax, yMin, yMax };
}

/**
 * 1D profiles (shock tubes, advected waves). Plots every non-x column of
 * each input; *_exact / u_exact columns are drawn dashed as references.
 */
function renderProfile(spec: FigureSpec): string {
  const tables = spec.inputs.map((p) => [p, readCsv(p, ["x"])] as [string, NumericTable]);
  const series: Array<{ label: string; x: Float64Array; y: Float64Array; dashed: boolean }> = [];
  for (const [path, table] of tables) {
    const x = table.data.get("x")!;
    for (const col of table.columns) {
      if (col === "x") continue;
      const label = tables.length > 1 ? `${basename(path, ".csv")}:${col}` : col;
      series.push({ label, x, y: table.data.get(col)!, dashed: col.endsWith("_exact") });
    }
  }
  const allX: number[] = [];
  const allY: number[] = [];
  for (const s of series) {
    allX.push(s.x[0], s.x[s.x.length - 1]);
    for (const v of s.y) allY.push(v);
  }
  const fig = new SvgFigure(
    extentOf(allX, allY), spec.title ?? "", spec.xLabel ?? "x", spec.yLabel ?? ""
  );
  series.forEach((s, i) => {
    fig.polyline(s.x, s.y, PALETTE[i % PALETTE.length], s.dashed);
  });
  fig.legend(series.map((s, i) => ({
    label: s.label, color: PALETTE[i % PALETTE.length], dashed: s.dashed,
  })));
  return fig.toString();
}

/** Equidistant-level field contours (density maps of the 2D cases). */
function renderContour(spec: FigureSpec): string {
  const column = spec.column ?? "rho";
  const table = readCsv(spec.inputs[0], ["x", "y", column]);
  const field = toStructuredField(table, column);
  const levels = equidistantLevels(spec.levels!.count, spec.levels!.min, spec.levels!.max);

  const ex: Extent = {
    xMin: field.x[0],
    xMax: field.x[field.nx - 1],
    yMin: field.y[0],
    yMax: field.y[field.ny - 1],
  };
  const fig = new SvgFigure(ex, spec.title ?? "", spec.xLabel ?? "x", spec.yLabel ?? "y");
  for (const level of levels) {
    const segs = isolines(field, level);
    if (segs.length > 0) fig.segments(segs, "#1f3bb3");
  }
  return fig.toString();
}

/**
 * Spectral curves: dispersion error Re(kappa') - kappa and dissipation
 * Im(kappa') versus kappa, one pair of curves per input CSV.
 */
function renderSpectral(spec: FigureSpec): string {
  const tables = spec.inputs.map((p) => {
    const t = readCsv(p, ["kappa", "kappa_prime_re", "kappa_prime_im"]);
    return { name: basename(p, ".csv"), t };
  });
  const allY: number[] = [];
  const allX: number[] = [];
  for (const { t } of tables) {
    const k = t.data.get("kappa")!;
    const re = t.data.get("kappa_prime_re")!;
    const im = t.data.get("kappa_prime_im")!;
    for (let i = 0; i < t.rows; i++) {
      allX.push(k[i]);
      allY.push(re[i] - k[i], im[i]);
    }
  }
  const fig = new SvgFigure(
    extentOf(allX, allY),
    spec.title ?? "",
    spec.xLabel ?? "wavenumber",
    spec.yLabel ?? "dispersion error / dissipation"
  );
  const legend: Array<{ label: string; color: string; dashed?: boolean }> = [];
  tables.forEach(({ name, t }, i) => {
    const k = t.data.get("kappa")!;
    const re = t.data.get("kappa_prime_re")!;
    const im = t.data.get("kappa_prime_im")!;
    const dispErr = Float64Array.from(k, (v, j) => re[j] - v);
    const color = PALETTE[i % PALETTE.length];
    fig.polyline(k, dispErr, color, false);
    fig.polyline(k, im, color, true);
    legend.push({ label: `${name} Re-k`, color });
    legend.push({ label: `${name} Im`, color, dashed: true });
  });
  fig.legend(legend);
  return fig.toString();
}

export { CsvSchemaError };
