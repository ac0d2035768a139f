#!/usr/bin/env python3
"""The two-variable polynomial behind rectangular characters.

For a rectangle with p rows and q columns, the normalized character at any
cycle type mu is a fixed polynomial in p and q — independent of the
rectangle. The polynomial is assembled from a signed count over pairs of
permutations, and this script prints the first few and cross-checks them
against direct character computations.
"""

from rectchar import (
    default_names,
    factorization_poly,
    format_partition,
    normalized_character,
    rectangle,
)


def main() -> None:
    names = default_names(1)

    print("Pair-sum polynomials for single cycles:")
    for k in range(1, 6):
        poly = factorization_poly((k,))
        print(f"  k={k}:  {poly.to_string(names)}")

    print()
    print("And for some multi-part cycle types:")
    for mu in [(1, 1), (2, 1), (2, 2), (3, 2, 1)]:
        poly = factorization_poly(mu)
        print(f"  mu={format_partition(mu)}:  {poly.to_string(names)}")

    print()
    print("Every evaluation agrees with the character route:")
    checked = 0
    for p in range(1, 5):
        for q in range(p, 6):
            for mu in [(2,), (3,), (2, 1), (4,), (2, 2)]:
                if sum(mu) > p * q:
                    continue
                direct = normalized_character(rectangle(p, q), mu)
                via_poly = factorization_poly(mu).evaluate((p, q))
                assert direct == via_poly, (p, q, mu)
                checked += 1
    print(f"  {checked} (rectangle, cycle type) evaluations matched exactly")

    print()
    print("Highest- and lowest-degree monomials come with unit coefficients:")
    mu = (3, 2)
    poly = factorization_poly(mu)
    k, parts = sum(mu), len(mu)
    print(f"  mu={format_partition(mu)}: coefficient of p^{k} q^{parts} is "
          f"{poly.coefficient((k, parts))}, of p^{parts} q^{k} is "
          f"{poly.coefficient((parts, k))}")


if __name__ == "__main__":
    main()
