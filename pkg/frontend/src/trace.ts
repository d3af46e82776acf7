import fs from "node:fs";

/** Column-oriented view of a simulation trace CSV. */
export interface Trace {
  columns: string[];
  numeric: Map<string, Float64Array>;
  text: Map<string, string[]>;
  rows: number;
}

const TEXT_COLUMNS = new Set(["active_controller", "active_model"]);

export function parseTraceCsv(path: string): Trace {
  const raw = fs.readFileSync(path, "utf-8").trimEnd();
  if (raw.length === 0) {
    throw new Error(`trace file ${path} is empty`);
  }
  const lines = raw.split(/\r?\n/);
  const columns = lines[0].split(",");
  const rows = lines.length - 1;
  if (rows === 0) {
    throw new Error(`trace file ${path} has a header but no rows`);
  }
  const numeric = new Map<string, Float64Array>();
  const text = new Map<string, string[]>();
  for (const c of columns) {
    if (TEXT_COLUMNS.has(c)) {
      text.set(c, new Array(rows));
    } else {
      numeric.set(c, new Float64Array(rows));
    }
  }
  for (let i = 0; i < rows; i++) {
    const parts = lines[i + 1].split(",");
    for (let j = 0; j < columns.length; j++) {
      const c = columns[j];
      if (TEXT_COLUMNS.has(c)) {
        text.get(c)![i] = parts[j];
      } else {
        numeric.get(c)![i] = Number(parts[j]);
      }
    }
  }
  return { columns, numeric, text, rows };
}

export function requireColumns(trace: Trace, names: string[]): void {
  for (const n of names) {
    if (!trace.columns.includes(n)) {
      throw new Error(`trace is missing required column '${n}'`);
    }
  }
}

export interface SimEvent {
  t: number;
  rule: string;
  [key: string]: unknown;
}

export function parseEventsJsonl(path: string): SimEvent[] {
  const raw = fs.readFileSync(path, "utf-8");
  const out: SimEvent[] = [];
  for (const line of raw.split(/\r?\n/)) {
    const s = line.trim();
    if (s.length === 0) continue;
    out.push(JSON.parse(s) as SimEvent);
  }
  return out;
}
