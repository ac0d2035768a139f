#!/usr/bin/env python3
"""Hook-length bookkeeping for a shape sitting inside a rectangle.

Take a partition lam inside a p-by-q box. Gluing the box's complement of lam
(rotated) onto lam's conjugate produces a cell set whose hook multiset is
exactly the box's hooks plus lam's hooks — a fact that turns products of
hooks into clean closed forms. This script draws the cell set and verifies
the multiset identity.
"""

from collections import Counter

from rectchar import (
    cells,
    cellset_hooks,
    format_partition,
    hook_lengths,
    rectangle,
    sq_shape,
)


def draw(cell_set, marker="#") -> None:
    if not cell_set:
        print("  (empty)")
        return
    rows = max(i for i, _ in cell_set)
    cols = max(j for _, j in cell_set)
    for i in range(1, rows + 1):
        line = "".join(
            marker if (i, j) in cell_set else "." for j in range(1, cols + 1)
        )
        print(f"  {line}")


def multiset_str(counter: Counter) -> str:
    return " ".join(
        f"{h}^{c}" if c > 1 else str(h) for h, c in sorted(counter.items())
    )


def main() -> None:
    p, q, lam = 3, 4, (3, 1)
    print(f"Box: {p} rows x {q} columns; inner shape lam = "
          f"{format_partition(lam)}")

    glued = sq_shape(lam, p, q)
    print(f"\nGlued cell set ({len(glued)} cells = pq + |lam|):")
    draw(glued)

    actual = cellset_hooks(glued)
    expected = cellset_hooks(frozenset(cells(rectangle(p, q))))
    for h in hook_lengths(lam):
        expected[h] += 1

    print(f"\nHooks of the glued set : {multiset_str(actual)}")
    print(f"Box hooks + lam's hooks: {multiset_str(expected)}")
    print(f"Multisets equal: {actual == expected}")

    print("\nSweeping every shape in a 4x4 box:")
    from rectchar import partitions_in_box

    count = 0
    for shape in partitions_in_box(4, 4):
        glued = sq_shape(shape, 4, 4)
        actual = cellset_hooks(glued)
        expected = cellset_hooks(frozenset(cells(rectangle(4, 4))))
        for h in hook_lengths(shape):
            expected[h] += 1
        assert actual == expected, shape
        count += 1
    print(f"  identity verified for all {count} shapes")


if __name__ == "__main__":
    main()
