/**
 * Minimal deterministic SVG figure builder: fixed canvas, linear axes with
 * tick labels, polylines and segment batches in data coordinates.
 */

export interface Extent {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

const WIDTH = 720;
const HEIGHT = 540;
const MARGIN = { left: 64, right: 20, top: 36, bottom: 48 };

export class SvgFigure {
  private parts: string[] = [];
  private ex: Extent;

  constructor(extent: Extent, title = "", xLabel = "", yLabel = "") {
    this.ex = extent;
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
        `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="13">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`
    );
    this.drawAxes(title, xLabel, yLabel);
  }

  private px(x: number): number {
    const w = WIDTH - MARGIN.left - MARGIN.right;
    return MARGIN.left + ((x - this.ex.xMin) / (this.ex.xMax - this.ex.xMin)) * w;
  }

  private py(y: number): number {
    const h = HEIGHT - MARGIN.top - MARGIN.bottom;
    return HEIGHT - MARGIN.bottom - ((y - this.ex.yMin) / (this.ex.yMax - this.ex.yMin)) * h;
  }

  private drawAxes(title: string, xLabel: string, yLabel: string): void {
    const x0 = MARGIN.left;
    const x1 = WIDTH - MARGIN.right;
    const y0 = HEIGHT - MARGIN.bottom;
    const y1 = MARGIN.top;
    this.parts.push(
      `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" ` +
        `fill="none" stroke="black"/>`
    );
    for (const t of ticks(this.ex.xMin, this.ex.xMax)) {
      const p = this.px(t);
      this.parts.push(
        `<line x1="${r2(p)}" y1="${y0}" x2="${r2(p)}" y2="${y0 + 5}" stroke="black"/>`,
        `<text x="${r2(p)}" y="${y0 + 20}" text-anchor="middle">${fmtTick(t)}</text>`
      );
    }
    for (const t of ticks(this.ex.yMin, this.ex.yMax)) {
      const p = this.py(t);
      this.parts.push(
        `<line x1="${x0 - 5}" y1="${r2(p)}" x2="${x0}" y2="${r2(p)}" stroke="black"/>`,
        `<text x="${x0 - 8}" y="${r2(p + 4)}" text-anchor="end">${fmtTick(t)}</text>`
      );
    }
    if (title) {
      this.parts.push(
        `<text x="${WIDTH / 2}" y="${MARGIN.top - 12}" text-anchor="middle" ` +
          `font-size="15">${escapeXml(title)}</text>`
      );
    }
    if (xLabel) {
      this.parts.push(
        `<text x="${WIDTH / 2}" y="${HEIGHT - 10}" text-anchor="middle">` +
          `${escapeXml(xLabel)}</text>`
      );
    }
    if (yLabel) {
      this.parts.push(
        `<text x="16" y="${HEIGHT / 2}" text-anchor="middle" ` +
          `transform="rotate(-90 16 ${HEIGHT / 2})">${escapeXml(yLabel)}</text>`
      );
    }
  }

  polyline(xs: ArrayLike<number>, ys: ArrayLike<number>, color: string, dashed = false): void {
    const pts: string[] = [];
    for (let i = 0; i < xs.length; i++) {
      pts.push(`${r2(this.px(xs[i]))},${r2(this.py(ys[i]))}`);
    }
    const dash = dashed ? ` stroke-dasharray="6,4"` : "";
    this.parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}"` +
        ` stroke-width="1.2"${dash}/>`
    );
  }

  /** Batch of disjoint segments (isolines) as one compact path element. */
  segments(segs: Array<[number, number, number, number]>, color: string): void {
    const d: string[] = [];
    for (const [xa, ya, xb, yb] of segs) {
      d.push(`M${r2(this.px(xa))} ${r2(this.py(ya))}L${r2(this.px(xb))} ${r2(this.py(yb))}`);
    }
    this.parts.push(
      `<path d="${d.join("")}" fill="none" stroke="${color}" stroke-width="0.8"/>`
    );
  }

  legend(entries: Array<{ label: string; color: string; dashed?: boolean }>): void {
    let y = MARGIN.top + 16;
    for (const e of entries) {
      const dash = e.dashed ? ` stroke-dasharray="6,4"` : "";
      this.parts.push(
        `<line x1="${WIDTH - 190}" y1="${y - 4}" x2="${WIDTH - 160}" y2="${y - 4}" ` +
          `stroke="${e.color}" stroke-width="1.5"${dash}/>`,
        `<text x="${WIDTH - 152}" y="${y}">${escapeXml(e.label)}</text>`
      );
      y += 18;
    }
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

/** 5-7 round tick positions covering [lo, hi]. */
export function ticks(lo: number, hi: number): number[] {
  const span = hi - lo;
  const rawStep = span / 5;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => span / s <= 6)!;
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let t = first; t <= hi + 1e-12 * span; t += step) out.push(t);
  return out;
}

function r2(v: number): string {
  return (Math.round(v * 100) / 100).toString();
}

function fmtTick(v: number): string {
  const s = v.toPrecision(6);
  return String(Number(s));
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
