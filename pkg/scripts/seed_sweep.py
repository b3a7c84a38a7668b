"""Repeat an experiment over seeds and summarize interval lengths and degrees.

    python scripts/seed_sweep.py torus --seeds 10
"""

import argparse
import time

import numpy as np

from circcoords.errors import CircCoordsError
from circcoords.pipeline import run_pipeline
from presets import NAMES, degree_rows, preset


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("name", choices=NAMES)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--top", type=int)
    args = ap.parse_args()

    for seed in range(args.seeds):
        t0 = time.perf_counter()
        try:
            res = run_pipeline(preset(args.name, seed, top=args.top))
        except CircCoordsError as exc:
            print(f"seed {seed}: {exc.stage} failed: {exc}")
            continue
        cap = res.diagram.max_value()
        lengths = [round(iv.length(cap), 3) for iv in res.diagram.sorted_by_length(1)[:5]]
        line = f"seed {seed}: {len(res.filtration)} simplices, top lengths {lengths}"
        data = res.data
        if data is not None and data.truth is not None and res.coordinates:
            _, rows = degree_rows(data, res.coordinates)
            M = np.array(rows)
            line += f", degrees {rows}"
            if M.shape[0] == M.shape[1]:
                line += f", det {int(round(np.linalg.det(M)))}"
        print(line + f", {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
