"""Count skew-convex functions on each conjugacy class of F_4 and F_9 by brute force."""

import argparse

from skewconvex import action, funcring
from skewconvex.scalars import Field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=4, help="skip orbits whose K^X search is larger")
    args = ap.parse_args()
    fields = {"F4": Field.fq(2, [1, 1, 1]), "F9": Field.fq(3, [1, 0, 1])}
    for name, F in fields.items():
        for orb in action.orbits(F):
            if len(orb) > args.max_order:
                print(f"{name}  orbit of {orb[0]}  size {len(orb)}  skipped")
                continue
            X = funcring.FiniteInvariantSet(orb, F)
            n = len(funcring.convex_functions(X))
            print(f"{name}  orbit of {orb[0]}  size {len(orb)}  convex {n}")


if __name__ == "__main__":
    main()
