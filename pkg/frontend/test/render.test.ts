import { execFileSync } from "node:child_process";
import fs from "node:fs";
import path from "node:path";
import { beforeAll, describe, expect, it } from "vitest";

import { render } from "../src/render.js";
import { parseEventsJsonl, parseTraceCsv } from "../src/trace.js";

const HERE = path.dirname(new URL(import.meta.url).pathname);
const DATA = path.join(HERE, "..", "testdata");
const OUT = path.join(DATA, "figures");
const SCENARIOS = path.join(HERE, "..", "..", "scenarios");

const GOLDEN = [
  { name: "dynamic_environments", mu: { snow: 1.0, icy: 1.0 } },
  { name: "unforeseen_environment", mu: { icy: 3.0, learned: 3.0 } },
];

function tracePath(name: string): string {
  return path.join(DATA, `${name}.trace.csv`);
}

function eventsPath(name: string): string {
  return path.join(DATA, `${name}.events.jsonl`);
}

/** Produce the golden traces through the simulator's command-line interface
 * (cached between runs; delete testdata/ to regenerate). */
function ensureGolden(name: string): void {
  if (fs.existsSync(tracePath(name)) && fs.existsSync(eventsPath(name))) {
    return;
  }
  fs.mkdirSync(DATA, { recursive: true });
  execFileSync(
    "python3",
    [
      "-m", "slipsafe", "--quiet", "simulate",
      "--scenario", path.join(SCENARIOS, `${name}.json`),
      "--trace", tracePath(name),
      "--events", eventsPath(name),
    ],
    { stdio: "inherit", timeout: 300_000 },
  );
}

beforeAll(() => {
  for (const g of GOLDEN) ensureGolden(g.name);
}, 360_000);

describe("figure rendering on the golden traces", () => {
  for (const g of GOLDEN) {
    it(`renders three figures for ${g.name}`, () => {
      const res = render({
        tracePath: tracePath(g.name),
        eventsPath: eventsPath(g.name),
        outDir: OUT,
        figures: ["velocities", "slip", "envelope"],
        slipBounds: g.mu,
        theta: 0.35,
      });
      expect(res.files).toHaveLength(3);
      for (const f of res.files) {
        expect(fs.existsSync(f)).toBe(true);
        const svg = fs.readFileSync(f, "utf-8");
        expect(svg.startsWith("<svg")).toBe(true);
        expect(svg).toContain("<polyline");
        expect(svg.length).toBeGreaterThan(2_000);
      }
    });
  }

  it("marks the learned-model activation on the envelope figure", () => {
    const name = "unforeseen_environment";
    const events = parseEventsJsonl(eventsPath(name));
    const ruleIV = events.find((e) => e.rule === "IV");
    expect(ruleIV).toBeDefined();
    const res = render({
      tracePath: tracePath(name),
      eventsPath: eventsPath(name),
      outDir: OUT,
      figures: ["envelope"],
      slipBounds: { icy: 3.0 },
      theta: 0.35,
    });
    const markers = res.envelopeMarkers.filter((m) => m.rule === "IV");
    expect(markers).toHaveLength(1);
    expect(Math.abs(markers[0].t - ruleIV!.t)).toBeLessThanOrEqual(1.0);
    // the marker must be drawn in the SVG at its event time
    const svg = fs.readFileSync(res.files[0], "utf-8");
    const m = svg.match(/class="event-marker" data-t="([0-9.eE+-]+)"/);
    expect(m).not.toBeNull();
    expect(Math.abs(Number(m![1]) - ruleIV!.t)).toBeLessThanOrEqual(1.0);
  });

  it("draws the slip bound segments", () => {
    const name = "dynamic_environments";
    const res = render({
      tracePath: tracePath(name),
      eventsPath: eventsPath(name),
      outDir: OUT,
      figures: ["slip"],
      slipBounds: { snow: 1.0, icy: 1.0 },
      theta: 0.35,
    });
    const svg = fs.readFileSync(res.files[0], "utf-8");
    expect(svg).toContain("bound 1");
  });

  it("rejects an empty trace with a named error", () => {
    const empty = path.join(DATA, "empty.trace.csv");
    fs.writeFileSync(empty, "");
    expect(() =>
      render({
        tracePath: empty,
        outDir: OUT,
        figures: ["slip"],
        slipBounds: {},
        theta: 0.35,
      }),
    ).toThrow(/empty/);
  });

  it("rejects a trace missing a required column", () => {
    const bad = path.join(DATA, "bad.trace.csv");
    fs.writeFileSync(bad, "t,w\n0.0,1.0\n");
    expect(() =>
      render({
        tracePath: bad,
        outDir: OUT,
        figures: ["envelope"],
        slipBounds: {},
        theta: 0.35,
      }),
    ).toThrow(/envelope_value/);
  });

  it("parses trace columns faithfully", () => {
    const tr = parseTraceCsv(tracePath("dynamic_environments"));
    expect(tr.columns[0]).toBe("t");
    expect(tr.numeric.get("t")![0]).toBe(0);
    expect(tr.text.get("active_controller")![0]).toBe("rhac");
    expect(tr.rows).toBeGreaterThan(1_000);
  });
});
