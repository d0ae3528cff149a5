"""Measure max per-node triangle queries / n^2 on random sets.

The acceptance constant C_TRI was fixed from the n=6 row of this script
(seed 2024, 200 sets) and is not retuned.
"""
import argparse
import random

from koutpoly.enumerator import EnumConfig, enumerate_polygons
from koutpoly.geom import GeometryError, validate_point_set


def random_set(rng, n, hi):
    while True:
        try:
            return validate_point_set([(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(n)])
        except GeometryError:
            pass


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[6])
    ap.add_argument("--sets", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("n  sets  tri/n^2  isect/n^2  aux/n^2")
    for n in args.n:
        tri = isect = aux = 0.0
        for _ in range(args.sets):
            ps = random_set(rng, n, 100)
            for k in range(n - 2):
                st = enumerate_polygons(ps, EnumConfig(k=k, instrument=True))
                tri = max(tri, max(st.triangle_queries_per_node) / n**2)
                isect = max(isect, max(st.intersection_queries_per_node) / n**2)
                aux = max(aux, st.peak_aux_units / n**2)
        print(f"{n:<2} {args.sets:5d}  {tri:7.3f}  {isect:9.3f}  {aux:7.3f}")


if __name__ == "__main__":
    main()
