"""Delay predictions for the below-cutoff waveguide across the 8.2-9.2 GHz band.

Prints the transfer-matrix phase time next to the energy-borrowing bound,
the opaque-barrier limit and one carrier period, for both guide lengths.
"""

import argparse

import numpy as np

from wavegate.barrier import UndersizedWaveguide
from wavegate.chronometry import delay_report
from wavegate.signal import coherence_length_from_band


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=11)
    args = ap.parse_args()
    l = coherence_length_from_band(8.2e9, 9.2e9, 8.7e9)
    print(f"band coherence length {l * 1e3:.1f} mm")
    print(f"{'L mm':>7} {'f GHz':>7} {'phase ps':>9} {'bound ps':>9} {'opaque ps':>10} {'1/f ps':>7} gate")
    for length in (0.100, 0.1142):
        guide = UndersizedWaveguide(9.49e9, length, feed_cutoff=6.557e9)
        for f in np.linspace(8.2e9, 9.2e9, args.points):
            r = delay_report(guide, f, coherence_length=l)
            print(f"{length * 1e3:7.1f} {f / 1e9:7.2f} {r.phase_time * 1e12:9.1f} {r.uncertainty_bound * 1e12:9.1f} "
                  f"{r.hartman_time * 1e12:10.1f} {r.universal_time * 1e12:7.1f} {r.coherence_gate}")


if __name__ == "__main__":
    main()
