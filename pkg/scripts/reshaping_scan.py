"""Peak and front shifts through a gain doublet as the medium lengthens.

Defaults follow the bundled crossover preset; ``--preset wang-cell`` runs the
-310 group-index cell instead.
"""

import argparse

from wavegate.constants import C
from wavegate.scenarios import run_preset


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", default="hache-crossover", choices=["hache-crossover", "wang-cell"])
    args = ap.parse_args()
    res = run_preset(args.preset)
    s = res.summary
    print(f"carrier group index {s['carrier_group_index']:.4g}; advancement limit {s['advancement_limit_s'] * 1e9:.1f} ns")
    print(f"{'L m':>8} {'advance ns':>11} {'front ns':>9} {'v_g/c':>10}  regime")
    for r in res.rows:
        print(f"{r['length_m']:8.3f} {r['peak_advance_s'] * 1e9:11.3f} {r['front_delay_s'] * 1e9:9.3f} "
              f"{r['group_velocity_m_s'] / C:10.4g}  {r['regime']}")
    print("sequence:", " -> ".join(s["regime_sequence"]))
    if "crossover_length_m" in s:
        print(f"host phase-velocity crossover {s['crossover_length_m']:.1f} m")


if __name__ == "__main__":
    main()
