"""Polygon counts for points in convex position against sum_{j<=k} C(n, j)."""
import argparse
from math import comb

from koutpoly.cli import generate_points
from koutpoly.enumerator import EnumConfig, enumerate_polygons


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()
    print(" n  k   count  closed-form")
    for n in range(4, args.max_n + 1):
        ps = generate_points(n, seed=n, convex=True)
        for k in range(min(args.max_k, n - 3) + 1):
            got = enumerate_polygons(ps, EnumConfig(k=k)).polygons_emitted
            want = sum(comb(n, j) for j in range(k + 1))
            flag = "" if got == want else "  <-- mismatch"
            print(f"{n:2d} {k:2d} {got:7d} {want:12d}{flag}")


if __name__ == "__main__":
    main()
