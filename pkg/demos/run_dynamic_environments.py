"""Periodic snow/icy driving with the adaptive switching controller.

Runs the dynamic-environments scenario (120 s on snow, 150 s on icy, slip
bound 1 m/s), prints a few trajectory milestones and writes the trace and
event log next to this script under out/.
"""

import os

import numpy as np

from slipsafe.scenarios import dynamic_environments_doc, load_scenario
from slipsafe.sim import run_scenario, write_events

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "out")


def main():
    sc = load_scenario(dynamic_environments_doc())
    trace, events = run_scenario(sc)
    t = trace.column("t")
    w = trace.column("w")
    v = trace.column("v")
    s = trace.column("slip")

    print(f"scenario '{sc.name}': {len(trace)} rows, {len(events)} events")
    print("\n   t      w        v        slip    model")
    for tq in (0.0, 5.0, 60.0, 119.9, 121.0, 140.0, 269.9):
        i = int(np.argmin(np.abs(t - tq)))
        print(f"{t[i]:7.1f} {w[i]:8.3f} {v[i]:8.3f} {s[i]:8.4f}   "
              f"{trace.column('active_model')[i]}")

    after_transient = ((t >= 10.0) & (t < 120.0)) | (t >= 130.0)
    print(f"\nmax slip after the 10 s transients: "
          f"{s[after_transient].max():.4f}  (bound 1.0)")
    i_pre = int(np.searchsorted(t, 120.0)) - 1
    print(f"tracking error just before the road change: "
          f"dw={abs(w[i_pre] - 40.0):.2e} rad/s")

    os.makedirs(OUT, exist_ok=True)
    trace.to_csv(os.path.join(OUT, "dynamic_environments.trace.csv"))
    write_events(os.path.join(OUT, "dynamic_environments.events.jsonl"),
                 events)
    print(f"\ntrace and events written under {OUT}")
    print("render figures with:  cd ../frontend && npm run render -- "
          "--trace ../demos/out/dynamic_environments.trace.csv "
          "--events ../demos/out/dynamic_environments.events.jsonl "
          "--out-dir ../demos/out --mu snow=1,icy=1")


if __name__ == "__main__":
    main()
