import { FigureKind, PlotJob, render } from "./render.js";

function usage(): never {
  console.error(
    "usage: node dist/cli.js --trace TRACE.csv [--events EVENTS.jsonl] " +
      "--out-dir DIR [--figures velocities,slip,envelope] " +
      "[--mu tag=value,...] [--theta 0.35]",
  );
  process.exit(1);
}

export function parseArgs(argv: string[]): PlotJob {
  let trace: string | undefined;
  let events: string | undefined;
  let outDir = ".";
  let figures: FigureKind[] = ["velocities", "slip", "envelope"];
  const slipBounds: Record<string, number> = {};
  let theta = 0.35;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    const next = () => {
      i++;
      if (i >= argv.length) usage();
      return argv[i];
    };
    if (a === "--trace") trace = next();
    else if (a === "--events") events = next();
    else if (a === "--out-dir") outDir = next();
    else if (a === "--figures") {
      figures = next().split(",").map((f) => {
        if (f !== "velocities" && f !== "slip" && f !== "envelope") usage();
        return f as FigureKind;
      });
    } else if (a === "--mu") {
      for (const pair of next().split(",")) {
        const [k, v] = pair.split("=");
        if (!k || v === undefined || Number.isNaN(Number(v))) usage();
        slipBounds[k] = Number(v);
      }
    } else if (a === "--theta") theta = Number(next());
    else usage();
  }
  if (!trace) usage();
  return { tracePath: trace, eventsPath: events, outDir, figures, slipBounds, theta };
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  try {
    const job = parseArgs(process.argv.slice(2));
    const res = render(job);
    for (const f of res.files) console.log(f);
  } catch (err) {
    console.error(String(err instanceof Error ? err.message : err));
    process.exit(1);
  }
}
