#!/usr/bin/env python3
"""Size, height and width statistics of the closure order on B-orbits in
N2, and of the resolutions of each height-2 orbit closure."""

import argparse

from nilc.height2_catalogue import catalogue
from nilc.orbit_poset import enumerate_N2, enumerate_tilde
from nilc.root_system import CartanType, build

DEFAULT = "A1 A2 A3 B2 B3 C2 C3 D4 G2"


def describe(p) -> str:
    dims = [n.dim for n in p.nodes]
    levels = {d: dims.count(d) for d in set(dims)}
    return (
        f"{len(p):>5} orbits  {len(p.covers):>5} covers  top dim {max(dims):>3}  "
        f"widest level {max(levels.values()):>3}  maximal {len(p.maximal())}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("types", nargs="*", default=DEFAULT.split())
    ap.add_argument("--tilde", action="store_true", help="also census the resolutions")
    args = ap.parse_args()
    for name in args.types:
        sys = build(CartanType.parse(name))
        print(f"{name:<4} N2     {describe(enumerate_N2(sys))}")
        if args.tilde:
            for o in catalogue(sys):
                print(f"     {o.id:<12} {describe(enumerate_tilde(sys, o))}")


if __name__ == "__main__":
    main()
