"""Phase time of a rectangular barrier versus width, against the opaque limit."""

import argparse
import math

import numpy as np

from wavegate.chronometry import hartman_scan
from wavegate.constants import CONST


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--energy-ev", type=float, default=1.0)
    ap.add_argument("--height-ev", type=float, default=2.0)
    ap.add_argument("--max-kd", type=float, default=12.0)
    args = ap.parse_args()
    E, V0 = args.energy_ev * CONST.eV, args.height_ev * CONST.eV
    kappa = math.sqrt(2 * CONST.m_e * (V0 - E)) / CONST.hbar
    kd = np.linspace(0.25, args.max_kd, 48)
    scan = hartman_scan(E, V0, CONST.m_e, kd / kappa)
    print(f"opaque limit {scan.hartman_limit * 1e18:.3f} as, knee at kd = {scan.knee_width * kappa:.2f}")
    for x, t in zip(kd, scan.phase_times):
        bar = "#" * int(40 * t / scan.hartman_limit)
        print(f"kd {x:6.2f}  {t * 1e18:8.3f} as  {bar}")


if __name__ == "__main__":
    main()
