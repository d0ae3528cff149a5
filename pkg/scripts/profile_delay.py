"""Output spacing and tree shape under both schedules, plus wall time.

Wall time is reported only; the intersection backend is a linear scan.
"""
import argparse
import time

from koutpoly.cli import generate_points
from koutpoly.enumerator import EnumConfig, Schedule, enumerate_polygons


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    print(" n  k  schedule   polygons  depth  max-gap  seconds")
    for n in args.n:
        ps = generate_points(n, seed=args.seed, coord_range=1000)
        k = min(args.k, n - 3)
        for sched in Schedule:
            t0 = time.perf_counter()
            st = enumerate_polygons(ps, EnumConfig(k=k, schedule=sched))
            dt = time.perf_counter() - t0
            print(
                f"{n:2d} {k:2d}  {sched.value:9s} {st.polygons_emitted:9d} {st.max_depth:6d}"
                f" {st.max_expansions_between_outputs:8d} {dt:8.2f}"
            )


if __name__ == "__main__":
    main()
