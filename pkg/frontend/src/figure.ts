/**
 * Figure specifications for regenerating the solver's publication-style
 * figures from harness CSV files.
 */

export type FigureKind = "profile" | "contour" | "spectral";

export interface ContourLevels {
  /** number of equidistant levels, endpoints included */
  count: number;
  min: number;
  max: number;
}

export interface FigureSpec {
  kind: FigureKind;
  /** one or more harness CSV files; contour mode takes exactly one */
  inputs: string[];
  output: string;
  xLabel?: string;
  yLabel?: string;
  title?: string;
  /** contour mode only */
  levels?: ContourLevels;
  /** contour mode: which field column to contour (default "rho") */
  column?: string;
}

export class FigureSpecError extends Error {}

/**
 * The equidistant level set: min + k * (max - min) / (count - 1),
 * k = 0..count-1, inclusive of both endpoints. A spec like
 * "30 equidistant contours from 0.2 to 1.7" maps to
 * equidistantLevels(30, 0.2, 1.7) = 0.2 + k * 1.5 / 29.
 */
export function equidistantLevels(count: number, min: number, max: number): number[] {
  if (!Number.isInteger(count) || count < 2) {
    throw new FigureSpecError(`contour level count must be an integer >= 2, got ${count}`);
  }
  if (!(min < max)) {
    throw new FigureSpecError(`contour level range requires min < max, got [${min}, ${max}]`);
  }
  const step = (max - min) / (count - 1);
  const levels = new Array<number>(count);
  for (let k = 0; k < count; k++) levels[k] = min + k * step;
  levels[count - 1] = max; // exact endpoint, no accumulated rounding
  return levels;
}

/** Validate a FigureSpec, throwing FigureSpecError with a precise reason. */
export function validateSpec(spec: FigureSpec): void {
  if (!["profile", "contour", "spectral"].includes(spec.kind)) {
    throw new FigureSpecError(`unknown figure kind ${JSON.stringify(spec.kind)}`);
  }
  if (spec.inputs.length === 0) {
    throw new FigureSpecError("at least one input CSV is required");
  }
  if (spec.kind === "contour") {
    if (spec.inputs.length !== 1) {
      throw new FigureSpecError("contour mode takes exactly one input CSV");
    }
    if (!spec.levels) {
      throw new FigureSpecError("contour mode requires levels {count, min, max}");
    }
    equidistantLevels(spec.levels.count, spec.levels.min, spec.levels.max);
  }
  if (!spec.output) {
    throw new FigureSpecError("output path is required");
  }
}
