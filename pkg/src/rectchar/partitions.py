"""Integer partitions, Young diagrams, hooks, contents, and box complements.

Conventions used throughout the package: English notation, cells are 1-based
(row, column) pairs with row 1 at the top.  A partition is a tuple of weakly
decreasing positive integers; the empty partition is ().  Serialized form is
comma separated parts ("4,3,1") with "-" standing for the empty partition.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator
from functools import lru_cache

Partition = tuple[int, ...]
Cell = tuple[int, int]
CellSet = frozenset[Cell]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize a part sequence to a partition tuple, dropping trailing zeros."""
    lam = tuple(int(x) for x in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(x <= 0 for x in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the serialized form: "4,3,1" or "-" for the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ValueError(f"not a partition string: {text!r}") from None
    return as_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


def rectangle(p: int, q: int) -> Partition:
    """The p-by-q rectangular partition (p rows of length q)."""
    if p < 0 or q < 0:
        raise ValueError("rectangle sides must be nonnegative")
    return (q,) * p if q else ()


def fits_in_box(lam: Partition, p: int, q: int) -> bool:
    return len(lam) <= p and (not lam or lam[0] <= q)


def cells(lam: Partition) -> Iterator[Cell]:
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            yield (i, j)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram: column lengths become row lengths."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for row_len in lam if row_len >= j) for j in range(1, lam[0] + 1))


def content(cell: Cell) -> int:
    """Column index minus row index."""
    i, j = cell
    return j - i


def hook_length(lam: Partition, cell: Cell) -> int:
    """Arm plus leg plus one for a cell of the diagram of lam."""
    lam = as_partition(lam)
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    col_len = sum(1 for row_len in lam if row_len >= j)
    return lam[i - 1] + col_len - i - j + 1


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of every cell, row by row."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [
        lam[i - 1] + conj[j - 1] - i - j + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    ]


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> int:
    return math.prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = as_partition(lam)
    return math.factorial(sum(lam)) // hook_product(lam)


def complement(lam: Partition, p: int, q: int) -> Partition:
    """Complement of lam inside the p-by-q box, read upper left justified.

    Row i of the complement has q - lam[p + 1 - i] cells, so the box minus a
    180-degree rotated copy of lam removed from its lower right corner.
    """
    lam = as_partition(lam)
    if not fits_in_box(lam, p, q):
        raise ValueError(f"{lam} does not fit in a {p}x{q} box")
    padded = lam + (0,) * (p - len(lam))
    return as_partition(q - padded[p - i] for i in range(1, p + 1))


def sq_shape(lam: Partition, p: int, q: int) -> CellSet:
    """Skew diagram whose hooks are those of the p-by-q box plus those of lam.

    Construction: take the box complement of lam (the box minus a rotated
    copy of lam removed from its lower right corner), then attach the
    180-degree rotation of lam twice: once above the top edge of the box,
    right-aligned with the box's last column, and once to the left of the
    left edge, bottom-aligned with the box's last row.  Coordinates are
    shifted by (len(lam), lam[0]) so every cell stays positive.  The result
    has p*q + |lam| cells and its hook multiset is the disjoint union of the
    hook multisets of the box and of lam (tested exhaustively for p, q <= 5).
    """
    lam = as_partition(lam)
    if not fits_in_box(lam, p, q):
        raise ValueError(f"{lam} does not fit in a {p}x{q} box")
    ell = len(lam)
    width = lam[0] if lam else 0
    out: set[Cell] = set()
    # rotated copy above the top edge, rows 1..ell, right edge at column width+q
    for r in range(1, ell + 1):
        row_len = lam[ell - r]
        for j in range(width + q - row_len + 1, width + q + 1):
            out.add((r, j))
    # box complement, rows ell+1..ell+p, left edge at column width+1
    for i, row_len in enumerate(complement(lam, p, q), start=1):
        for j in range(width + 1, width + row_len + 1):
            out.add((ell + i, j))
    # rotated copy left of the left edge, rows p+1..p+ell, right edge at column width
    for r in range(1, ell + 1):
        row_len = lam[ell - r]
        for j in range(width - row_len + 1, width + 1):
            out.add((p + r, j))
    assert len(out) == p * q + sum(lam)
    return frozenset(out)


def cellset_hooks(diagram: CellSet) -> Counter[int]:
    """Hook length multiset of an explicit cell set (arm + leg + 1 by counting).

    Rows of the cell set must be contiguous column intervals.
    """
    cells_set = set(diagram)
    rows: dict[int, list[int]] = {}
    for cell in cells_set:
        if not (isinstance(cell, tuple) and len(cell) == 2):
            raise ValueError(f"malformed cell: {cell!r}")
        i, j = cell
        if not (isinstance(i, int) and isinstance(j, int) and i >= 1 and j >= 1):
            raise ValueError(f"malformed cell: {cell!r}")
        rows.setdefault(i, []).append(j)
    for i, cols in rows.items():
        if max(cols) - min(cols) + 1 != len(cols):
            raise ValueError(f"row {i} is not contiguous")
    hooks: Counter[int] = Counter()
    for i, j in cells_set:
        arm = sum(1 for jj in rows[i] if jj > j)
        leg = sum(1 for ii, jj in cells_set if jj == j and ii > i)
        hooks[arm + leg + 1] += 1
    return hooks


def partitions_of(
    n: int, max_part: int | None = None, max_parts: int | None = None
) -> Iterator[Partition]:
    """All partitions of n, largest part first, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    first_cap = n if max_part is None else min(max_part, n)
    rows_cap = n if max_parts is None else max_parts

    def rec(remaining: int, cap: int, rows: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if rows == 0 or cap == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part, rows - 1):
                yield (part,) + rest

    return rec(n, first_cap, rows_cap)


def partitions_in_box(p: int, q: int) -> Iterator[Partition]:
    """All partitions with at most p parts, each at most q (the empty one included)."""

    def rec(rows: int, cap: int) -> Iterator[Partition]:
        yield ()
        if rows == 0 or cap == 0:
            return
        for part in range(cap, 0, -1):
            for rest in rec(rows - 1, part):
                yield (part,) + rest

    return rec(p, q)
