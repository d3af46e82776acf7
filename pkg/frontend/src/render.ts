import fs from "node:fs";
import path from "node:path";

import { parseEventsJsonl, parseTraceCsv, requireColumns, SimEvent, Trace } from "./trace.js";
import { HSegment, Panel, renderFigure, VMarker } from "./svg.js";

export type FigureKind = "velocities" | "slip" | "envelope";

export interface PlotJob {
  tracePath: string;
  eventsPath?: string;
  outDir: string;
  figures: FigureKind[];
  /** slip bound per environment tag (matched against active_model prefixes) */
  slipBounds: Record<string, number>;
  /** envelope level line */
  theta: number;
  prefix?: string;
}

export interface RenderResult {
  files: string[];
  /** rule-firing markers drawn on the envelope figure */
  envelopeMarkers: { t: number; rule: string }[];
}

const SWITCH_RULES = new Set(["I", "II", "III", "IV"]);

function switchMarkers(events: SimEvent[]): VMarker[] {
  const out: VMarker[] = [];
  for (const e of events) {
    if (e.rule === "schedule") {
      out.push({ x: e.t, color: "#777777", label: `switch → ${e["to"] ?? ""}` });
    }
  }
  return out;
}

function ruleMarkers(events: SimEvent[]): VMarker[] {
  const out: VMarker[] = [];
  for (const e of events) {
    if (SWITCH_RULES.has(e.rule)) {
      out.push({ x: e.t, color: "#c0392b", label: `rule ${e.rule}` });
    }
  }
  return out;
}

/** Piecewise slip-bound segments from the active-model column. */
function boundSegments(trace: Trace, bounds: Record<string, number>): HSegment[] {
  const t = trace.numeric.get("t")!;
  const model = trace.text.get("active_model")!;
  const segs: HSegment[] = [];
  const boundFor = (label: string): number | undefined => {
    const tag = label.replace(/[0-9]+$/, "");
    return bounds[tag] ?? bounds[label];
  };
  let start = 0;
  let cur = boundFor(model[0]);
  for (let i = 1; i < trace.rows; i++) {
    const b = boundFor(model[i]);
    if (b !== cur) {
      if (cur !== undefined) {
        segs.push({ x0: t[start], x1: t[i], y: cur, color: "#c0392b", label: `bound ${cur}` });
      }
      start = i;
      cur = b;
    }
  }
  if (cur !== undefined) {
    segs.push({ x0: t[start], x1: t[trace.rows - 1], y: cur, color: "#c0392b", label: `bound ${cur}` });
  }
  return segs;
}

export function render(job: PlotJob): RenderResult {
  const trace = parseTraceCsv(job.tracePath);
  const events = job.eventsPath ? parseEventsJsonl(job.eventsPath) : [];
  fs.mkdirSync(job.outDir, { recursive: true });
  const prefix = job.prefix ?? path.basename(job.tracePath).replace(/\.csv$/, "");
  const t = () => trace.numeric.get("t")!;
  const files: string[] = [];
  const envelopeMarkers: { t: number; rule: string }[] = [];

  for (const fig of job.figures) {
    let panels: Panel[];
    let name: string;
    if (fig === "velocities") {
      requireColumns(trace, ["t", "w", "v", "w_ref", "v_ref"]);
      panels = [
        {
          title: "Wheel angular velocity",
          yLabel: "w (rad/s)",
          series: [
            { x: t(), y: trace.numeric.get("w")!, color: "#1f77b4", label: "w" },
            { x: t(), y: trace.numeric.get("w_ref")!, color: "#1f77b4", label: "w ref", dash: "6,4" },
          ],
          markers: switchMarkers(events),
        },
        {
          title: "Longitudinal velocity",
          yLabel: "v (m/s)",
          series: [
            { x: t(), y: trace.numeric.get("v")!, color: "#2ca02c", label: "v" },
            { x: t(), y: trace.numeric.get("v_ref")!, color: "#2ca02c", label: "v ref", dash: "6,4" },
          ],
          markers: switchMarkers(events),
        },
      ];
      name = `${prefix}.velocities.svg`;
    } else if (fig === "slip") {
      requireColumns(trace, ["t", "slip"]);
      panels = [
        {
          title: "Wheel slip and safety bound",
          yLabel: "slip (m/s)",
          series: [
            { x: t(), y: trace.numeric.get("slip")!, color: "#1f77b4", label: "slip" },
          ],
          hsegments: boundSegments(trace, job.slipBounds),
          markers: switchMarkers(events),
        },
      ];
      name = `${prefix}.slip.svg`;
    } else {
      requireColumns(trace, ["t", "envelope_value"]);
      const markers = ruleMarkers(events);
      for (const m of markers) {
        envelopeMarkers.push({ t: m.x, rule: m.label.replace("rule ", "") });
      }
      panels = [
        {
          title: "Safety-envelope value",
          yLabel: "e' P e",
          series: [
            { x: t(), y: trace.numeric.get("envelope_value")!, color: "#9467bd", label: "e' P e" },
          ],
          hsegments: [
            { x0: t()[0], x1: t()[trace.rows - 1], y: job.theta, color: "#c0392b", label: `theta = ${job.theta}` },
          ],
          markers,
        },
      ];
      name = `${prefix}.envelope.svg`;
    }
    const { svg } = renderFigure(panels);
    const out = path.join(job.outDir, name);
    fs.writeFileSync(out, svg);
    files.push(out);
  }
  return { files, envelopeMarkers };
}
