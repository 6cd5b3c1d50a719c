/**
 * Marching-squares isoline extraction on a structured grid.
 *
 * Each grid cell contributes zero, one, or two line segments per level,
 * with crossing points linearly interpolated along the cell edges. The
 * segments are emitted unjoined; SVG rendering draws them individually,
 * which is exact and avoids path-stitching ambiguity at saddles.
 */

import { StructuredField } from "./grid.js";

export type Segment = [number, number, number, number]; // x1, y1, x2, y2

/** Interpolated crossing of `level` between (xa, va) and (xb, vb). */
function crossing(a: number, b: number, va: number, vb: number, level: number): number {
  return a + ((level - va) / (vb - va)) * (b - a);
}

export function isolines(field: StructuredField, level: number): Segment[] {
  const { x, y, values, nx, ny } = field;
  const segments: Segment[] = [];

  for (let j = 0; j < ny - 1; j++) {
    for (let i = 0; i < nx - 1; i++) {
      // corner values: 0 = (i,j), 1 = (i+1,j), 2 = (i+1,j+1), 3 = (i,j+1)
      const v0 = values[j * nx + i];
      const v1 = values[j * nx + i + 1];
      const v2 = values[(j + 1) * nx + i + 1];
      const v3 = values[(j + 1) * nx + i];
      const caseIndex =
        (v0 >= level ? 1 : 0) |
        (v1 >= level ? 2 : 0) |
        (v2 >= level ? 4 : 0) |
        (v3 >= level ? 8 : 0);
      if (caseIndex === 0 || caseIndex === 15) continue;

      // edge crossing points (bottom, right, top, left)
      const bottom = (v0 >= level) !== (v1 >= level)
        ? [crossing(x[i], x[i + 1], v0, v1, level), y[j]] as [number, number]
        : null;
      const right = (v1 >= level) !== (v2 >= level)
        ? [x[i + 1], crossing(y[j], y[j + 1], v1, v2, level)] as [number, number]
        : null;
      const top = (v3 >= level) !== (v2 >= level)
        ? [crossing(x[i], x[i + 1], v3, v2, level), y[j + 1]] as [number, number]
        : null;
      const left = (v0 >= level) !== (v3 >= level)
        ? [x[i], crossing(y[j], y[j + 1], v0, v3, level)] as [number, number]
        : null;

      const hits = [bottom, right, top, left].filter(
        (p): p is [number, number] => p !== null
      );
      if (hits.length === 2) {
        segments.push([hits[0][0], hits[0][1], hits[1][0], hits[1][1]]);
      } else if (hits.length === 4) {
        // saddle: resolve by the cell-center average
        const center = (v0 + v1 + v2 + v3) / 4;
        if ((center >= level) === (v0 >= level)) {
          segments.push([bottom![0], bottom![1], right![0], right![1]]);
          segments.push([top![0], top![1], left![0], left![1]]);
        } else {
          segments.push([bottom![0], bottom![1], left![0], left![1]]);
          segments.push([top![0], top![1], right![0], right![1]]);
        }
      }
    }
  }
  return segments;
}
