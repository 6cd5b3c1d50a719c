/**
 * Numeric CSV I/O matching the solver harness schema exactly: a single
 * header row of column names followed by full-precision decimal rows.
 */

import { readFileSync, writeFileSync } from "fs";
import Papa from "papaparse";

export class CsvSchemaError extends Error {}

export interface NumericTable {
  columns: string[];
  /** column name -> values, all rows present and finite */
  data: Map<string, Float64Array>;
  rows: number;
}

/** Parse a harness CSV; optionally require specific columns to exist. */
export function readCsv(path: string, required: string[] = []): NumericTable {
  const text = readFileSync(path, "utf8");
  return parseCsv(text, required, path);
}

export function parseCsv(text: string, required: string[] = [], name = "<string>"): NumericTable {
  const parsed = Papa.parse<Record<string, number>>(text.trim(), {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new CsvSchemaError(`${name}: parse error at row ${e.row}: ${e.message}`);
  }
  const columns = parsed.meta.fields ?? [];
  for (const col of required) {
    if (!columns.includes(col)) {
      throw new CsvSchemaError(
        `${name}: missing column "${col}" (found: ${columns.join(", ")})`
      );
    }
  }
  const rows = parsed.data.length;
  if (rows === 0) throw new CsvSchemaError(`${name}: no data rows`);
  const data = new Map<string, Float64Array>();
  for (const col of columns) {
    const values = new Float64Array(rows);
    for (let i = 0; i < rows; i++) {
      const v = parsed.data[i][col];
      if (typeof v !== "number" || !Number.isFinite(v)) {
        throw new CsvSchemaError(`${name}: non-numeric value in column "${col}" row ${i}`);
      }
      values[i] = v;
    }
    data.set(col, values);
  }
  return { columns, data, rows };
}

/** Serialize a table back to the harness CSV format (17 significant digits). */
export function formatCsv(table: NumericTable): string {
  const cols = table.columns.map((c) => table.data.get(c)!);
  const lines = [table.columns.join(",")];
  for (let i = 0; i < table.rows; i++) {
    lines.push(cols.map((c) => fmt(c[i])).join(","));
  }
  return lines.join("\n") + "\n";
}

export function writeCsv(path: string, table: NumericTable): void {
  writeFileSync(path, formatCsv(table));
}

/** Shortest decimal that round-trips a float64, like printf %.17g trimmed. */
function fmt(v: number): string {
  for (let p = 1; p <= 17; p++) {
    const s = v.toPrecision(p);
    if (Number(s) === v) return trimExponent(s);
  }
  return trimExponent(v.toPrecision(17));
}

function trimExponent(s: string): string {
  // normalize "1e+2" style exponents emitted by toPrecision
  return s.replace(/e\+?(-?)0*(\d)/, "e$1$2");
}
