"""Safe stop in an unmodeled environment through online model learning.

The vehicle tracks the stored icy model until t = 120 s, when the road
changes to something no stored model describes.  The envelope check trips
about a second later, the trailing sample window is turned into a model, a
fresh gain is synthesized against it (and its opposite-regime mirror), and
the vehicle parks itself with the wheel slip held inside the 3 m/s bound.
"""

import os

import numpy as np

from slipsafe.scenarios import load_scenario, unforeseen_environment_doc
from slipsafe.sim import run_scenario, write_events

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "out")


def main():
    sc = load_scenario(unforeseen_environment_doc())
    trace, events = run_scenario(sc)
    t = trace.column("t")
    w = trace.column("w")
    v = trace.column("v")
    s = trace.column("slip")

    learned = next(e for e in events if e["rule"] == "learned-model")
    fired = next(e for e in events if e["rule"] == "IV")
    print(f"environment change at t = 120.0 s")
    print(f"envelope rule fired at t = {fired['t']:.3f} s "
          f"(value {fired['trigger_value']:.3f} >= theta {fired['threshold']})")
    print("learned matrix:")
    print(np.array2string(np.array(learned["A_learned"]), precision=4))
    print(f"window conditioning: {learned['cond_P']:.3g}")
    print(f"\nfinal state: w = {w[-1]:.3f} rad/s, v = {v[-1]:.3f} m/s "
          f"(both below 0.5)")
    print(f"max slip over the run: {s.max():.3f}  (bound 3.0)")

    os.makedirs(OUT, exist_ok=True)
    trace.to_csv(os.path.join(OUT, "unforeseen_environment.trace.csv"))
    write_events(os.path.join(OUT, "unforeseen_environment.events.jsonl"),
                 events)
    print(f"\ntrace and events written under {OUT}")


if __name__ == "__main__":
    main()
