/** Minimal SVG line-chart builder: linear scales, axes with ticks, series
 * polylines, horizontal bound segments and labeled vertical markers. */

export interface Series {
  x: ArrayLike<number>;
  y: ArrayLike<number>;
  color: string;
  label: string;
  dash?: string;
}

export interface HSegment {
  x0: number;
  x1: number;
  y: number;
  color: string;
  label?: string;
}

export interface VMarker {
  x: number;
  color: string;
  label: string;
}

export interface Panel {
  title: string;
  yLabel: string;
  series: Series[];
  hsegments?: HSegment[];
  markers?: VMarker[];
}

const W = 900;
const PANEL_H = 260;
const MARGIN = { left: 64, right: 16, top: 34, bottom: 34 };

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function ticks(lo: number, hi: number, n = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / n)));
  const err = span / (n * step);
  const mult = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const s = step * mult;
  const out: number[] = [];
  for (let v = Math.ceil(lo / s) * s; v <= hi + 1e-12 * span; v += s) {
    out.push(v);
  }
  return out;
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Math.round(v * 1000) / 1000);
}

class Scale {
  constructor(
    readonly lo: number,
    readonly hi: number,
    readonly a: number,
    readonly b: number,
  ) {}

  static fit(lo: number, hi: number, outLo: number, outHi: number): Scale {
    if (!(hi > lo)) {
      hi = lo + 1;
      lo = lo - 1;
    }
    const a = (outHi - outLo) / (hi - lo);
    return new Scale(lo, hi, a, outLo - a * lo);
  }

  map(v: number): number {
    return this.a * v + this.b;
  }

  invert(px: number): number {
    return (px - this.b) / this.a;
  }
}

function finiteExtent(vals: ArrayLike<number>[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const arr of vals) {
    for (let i = 0; i < arr.length; i++) {
      const v = arr[i];
      if (Number.isFinite(v)) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
    }
  }
  if (lo === Infinity) {
    lo = 0;
    hi = 1;
  }
  return [lo, hi];
}

export interface RenderedFigure {
  svg: string;
  /** time -> pixel mapping used by every panel (for testing/consumers) */
  xScale: { map(t: number): number; invert(px: number): number };
}

export function renderFigure(panels: Panel[], xLabel = "t (s)"): RenderedFigure {
  const height = PANEL_H * panels.length;
  const xVals = panels.flatMap((p) => p.series.map((s) => s.x));
  const [xLo, xHi] = finiteExtent(xVals);
  const xS = Scale.fit(xLo, xHi, MARGIN.left, W - MARGIN.right);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${height}" ` +
      `viewBox="0 0 ${W} ${height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${W}" height="${height}" fill="white"/>`);
  panels.forEach((panel, pi) => {
    const top = pi * PANEL_H + MARGIN.top;
    const bottom = (pi + 1) * PANEL_H - MARGIN.bottom;
    const yVals = panel.series.map((s) => s.y) as ArrayLike<number>[];
    for (const h of panel.hsegments ?? []) yVals.push([h.y]);
    let [yLo, yHi] = finiteExtent(yVals);
    const pad = 0.06 * (yHi - yLo || 1);
    yLo -= pad;
    yHi += pad;
    const yS = Scale.fit(yLo, yHi, bottom, top);
    parts.push(
      `<text x="${MARGIN.left}" y="${top - 14}" font-weight="bold">` +
        `${esc(panel.title)}</text>`,
    );
    // axes
    parts.push(
      `<line x1="${MARGIN.left}" y1="${bottom}" x2="${W - MARGIN.right}" ` +
        `y2="${bottom}" stroke="black"/>`,
      `<line x1="${MARGIN.left}" y1="${top}" x2="${MARGIN.left}" ` +
        `y2="${bottom}" stroke="black"/>`,
    );
    for (const tx of ticks(xS.lo, xS.hi)) {
      const px = xS.map(tx);
      parts.push(
        `<line x1="${px}" y1="${bottom}" x2="${px}" y2="${bottom + 4}" stroke="black"/>`,
        `<text x="${px}" y="${bottom + 16}" text-anchor="middle">${fmt(tx)}</text>`,
      );
    }
    for (const ty of ticks(yLo, yHi)) {
      const py = yS.map(ty);
      parts.push(
        `<line x1="${MARGIN.left - 4}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="black"/>`,
        `<text x="${MARGIN.left - 7}" y="${py + 4}" text-anchor="end">${fmt(ty)}</text>`,
      );
    }
    parts.push(
      `<text x="${MARGIN.left - 48}" y="${(top + bottom) / 2}" ` +
        `transform="rotate(-90 ${MARGIN.left - 48} ${(top + bottom) / 2})" ` +
        `text-anchor="middle">${esc(panel.yLabel)}</text>`,
    );
    // series
    panel.series.forEach((s, si) => {
      const pts: string[] = [];
      for (let i = 0; i < s.x.length; i++) {
        const v = s.y[i];
        if (!Number.isFinite(v)) continue;
        pts.push(`${xS.map(s.x[i]).toFixed(2)},${yS.map(v).toFixed(2)}`);
      }
      const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
      parts.push(
        `<polyline fill="none" stroke="${s.color}" stroke-width="1.4"${dash} ` +
          `points="${pts.join(" ")}"/>`,
      );
      const lx = W - MARGIN.right - 150;
      const ly = top + 6 + 16 * si;
      parts.push(
        `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" ` +
          `stroke="${s.color}" stroke-width="2"${dash}/>`,
        `<text x="${lx + 28}" y="${ly + 4}">${esc(s.label)}</text>`,
      );
    });
    for (const h of panel.hsegments ?? []) {
      const py = yS.map(h.y);
      parts.push(
        `<line x1="${xS.map(h.x0)}" y1="${py}" x2="${xS.map(h.x1)}" y2="${py}" ` +
          `stroke="${h.color}" stroke-width="1.6" stroke-dasharray="7,4"/>`,
      );
      if (h.label) {
        parts.push(
          `<text x="${xS.map(h.x0) + 4}" y="${py - 5}" fill="${h.color}">` +
            `${esc(h.label)}</text>`,
        );
      }
    }
    (panel.markers ?? []).forEach((m, mi) => {
      const px = xS.map(m.x);
      parts.push(
        `<line class="event-marker" data-t="${m.x}" x1="${px}" y1="${top}" ` +
          `x2="${px}" y2="${bottom}" stroke="${m.color}" stroke-width="1.4" ` +
          `stroke-dasharray="3,3"/>`,
        `<text x="${px + 4}" y="${top + 12 + 13 * (mi % 3)}" fill="${m.color}">` +
          `${esc(m.label)}</text>`,
      );
    });
  });
  parts.push(
    `<text x="${W / 2}" y="${height - 6}" text-anchor="middle">${esc(xLabel)}</text>`,
  );
  parts.push("</svg>");
  return { svg: parts.join("\n"), xScale: xS };
}
