/**
 * Reshape a flattened field CSV (x, y, fields...; x varies fastest) into a
 * structured grid for contouring.
 */

import { CsvSchemaError, NumericTable } from "./csv.js";

export interface StructuredField {
  x: Float64Array; // nx unique ascending coordinates
  y: Float64Array; // ny unique ascending coordinates
  /** values[j * nx + i] at (x[i], y[j]) */
  values: Float64Array;
  nx: number;
  ny: number;
}

export function toStructuredField(table: NumericTable, column: string): StructuredField {
  for (const col of ["x", "y", column]) {
    if (!table.columns.includes(col)) {
      throw new CsvSchemaError(`field CSV lacks column "${col}"`);
    }
  }
  const xs = table.data.get("x")!;
  const ys = table.data.get("y")!;
  const vs = table.data.get(column)!;

  // row-major with x fastest: nx = index of first y change
  let nx = table.rows;
  for (let i = 1; i < table.rows; i++) {
    if (ys[i] !== ys[0]) {
      nx = i;
      break;
    }
  }
  const ny = table.rows / nx;
  if (!Number.isInteger(ny)) {
    throw new CsvSchemaError(`rows (${table.rows}) not divisible by row length (${nx})`);
  }
  for (let j = 0; j < ny; j++) {
    for (let i = 0; i < nx; i++) {
      const r = j * nx + i;
      if (xs[r] !== xs[i] || ys[r] !== ys[j * nx]) {
        throw new CsvSchemaError(`field CSV is not a structured x-fastest grid at row ${r}`);
      }
    }
  }
  return {
    x: xs.slice(0, nx),
    y: Float64Array.from({ length: ny }, (_, j) => ys[j * nx]),
    values: vs,
    nx,
    ny,
  };
}
