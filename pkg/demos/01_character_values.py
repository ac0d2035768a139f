#!/usr/bin/env python3
"""Exact irreducible character values of symmetric groups.

Computes a small character table column-by-column with exact integer
arithmetic, then shows the normalized variant used throughout the package:
pad a cycle type mu with fixed points up to n, scale by a falling factorial
over the number of standard tableaux.
"""

from rectchar import (
    format_partition,
    mn_character,
    normalized_character,
    partitions_of,
    rectangle,
    syt_count,
)


def main() -> None:
    n = 5
    shapes = sorted(partitions_of(n), reverse=True)
    types = sorted(partitions_of(n), reverse=True)

    print(f"Character table of the symmetric group on {n} points")
    header = " " * 12 + "".join(f"{format_partition(nu):>10}" for nu in types)
    print(header)
    for lam in shapes:
        row = "".join(f"{mn_character(lam, nu):>10}" for nu in types)
        print(f"{format_partition(lam):>10}  {row}")

    print()
    print("Column check: the identity column counts standard Young tableaux.")
    identity = tuple([1] * n)
    for lam in shapes:
        assert mn_character(lam, identity) == syt_count(lam)
    print(f"  verified for all {len(shapes)} shapes of size {n}")

    print()
    print("Normalized characters on rectangles (exact integers):")
    for p, q in [(2, 2), (2, 3), (3, 3), (3, 4)]:
        lam = rectangle(p, q)
        for mu in [(2,), (3,), (2, 2)]:
            if sum(mu) > p * q:
                continue
            value = normalized_character(lam, mu)
            print(
                f"  shape {p}x{q}, moved points {format_partition(mu)}:"
                f" {value}"
            )


if __name__ == "__main__":
    main()
