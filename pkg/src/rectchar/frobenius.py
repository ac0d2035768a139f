"""Single-cycle normalized characters via residue extraction at infinity.

The normalized character of lam at a k-cycle plus fixed points equals
-(1/k) [x^-1] (x)_k phi(x - k)/phi(x) where phi has the shifted first-column
hook coordinates of lam as roots.  For a stack of m rectangles the same ratio
collapses to falling factorials in the rectangle dimensions, which makes the
character a polynomial F_k in those dimensions; this module computes both the
numeric and the symbolic version with one windowed expansion routine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, as_partition
from .polynomials import MultivarPoly
from .series import InsufficientDepthError, linear_product

#: window 3 wider than strictly needed for [x^-1]; cheap insurance against
#: an off-by-one in the degree bookkeeping ever propagating silently
_WINDOW_MARGIN = 3


@dataclass(frozen=True)
class MultiRectShape:
    """A stack of m rectangles: p_i rows of length q_i, q strictly decreasing."""

    ps: tuple[int, ...]
    qs: tuple[int, ...]

    def __post_init__(self):
        if len(self.ps) != len(self.qs) or not self.ps:
            raise ValueError("need matching nonempty dimension tuples")
        if any(p <= 0 for p in self.ps) or any(q <= 0 for q in self.qs):
            raise ValueError("dimensions must be positive")
        if any(later >= earlier for later, earlier in zip(self.qs[1:], self.qs)):
            raise ValueError(f"row lengths must strictly decrease: {self.qs}")

    @property
    def m(self) -> int:
        return len(self.ps)

    def size(self) -> int:
        return sum(p * q for p, q in zip(self.ps, self.qs))

    def to_partition(self) -> Partition:
        out: tuple[int, ...] = ()
        for p, q in zip(self.ps, self.qs):
            out += (q,) * p
        return out


def rational_x_inverse_coefficient(num_roots, den_roots):
    """[x^-1] of prod(x - a)/prod(x - b), expanded in descending powers of x.

    Roots may be integers or polynomial values.  Works in a sliding window of
    top coefficients: the numerator product keeps only enough leading terms,
    then each denominator factor is divided out by the descending recurrence.
    The window is sized so the x^-1 slot is always reachable; the retry loop
    doubles it if a depth error ever signals otherwise.
    """
    num_roots = list(num_roots)
    den_roots = list(den_roots)
    window = max(len(num_roots) - len(den_roots) + 2, 1) + _WINDOW_MARGIN
    while True:
        try:
            series = linear_product(num_roots, window)
            for b in den_roots:
                series = series.divide_linear(b)
            return series.coefficient(-1)
        except InsufficientDepthError:
            window *= 2


def _phi_roots(lam: Partition) -> list[int]:
    """Roots of phi: lam_i + r - i for the r parts of lam."""
    r = len(lam)
    return [lam[i] + r - 1 - i for i in range(r)]


def frobenius_normalized(lam: Partition, k: int) -> Fraction | int:
    """Normalized character of lam at a single k-cycle plus fixed points."""
    lam = as_partition(lam)
    n = sum(lam)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= |lam| = {n}, got {k}")
    mu = _phi_roots(lam)
    num_roots = list(range(k)) + [x + k for x in mu]
    raw = rational_x_inverse_coefficient(num_roots, mu)
    value = Fraction(-raw, k)
    return int(value) if value.denominator == 1 else value


def rect_sum_vars(m: int) -> tuple[list[MultivarPoly], list[MultivarPoly]]:
    """The shifted row coordinates of an m-rectangle stack, symbolically.

    Variables are ordered p_1..p_m, q_1..q_m.  Returns (upper, lower) where
    upper[i] = q_i + p_i + p_{i+1} + ... + p_m and lower[i] = q_i + p_{i+1}
    + ... + p_m; these are the two root families of the character ratio after
    the telescoping cancellation.
    """
    upper: list[MultivarPoly] = []
    lower: list[MultivarPoly] = []
    for i in range(m):
        base = {(0,) * m + tuple(1 if t == i else 0 for t in range(m)): 1}
        for t in range(i + 1, m):
            base[tuple(1 if s == t else 0 for s in range(m)) + (0,) * m] = 1
        lower.append(MultivarPoly(2 * m, base))
        upper.append(
            lower[-1]
            + MultivarPoly(2 * m, {tuple(1 if s == i else 0 for s in range(m)) + (0,) * m: 1})
        )
    return upper, lower


@lru_cache(maxsize=None)
def _fk_xinverse(m: int, k: int) -> MultivarPoly:
    """[x^-1] of the symbolic ratio (x)_k prod(x-A_i)_k / prod(x-B_i)_k."""
    upper, lower = rect_sum_vars(m)
    num_roots: list = list(range(k))
    den_roots: list = []
    for i in range(m):
        num_roots.extend(upper[i] + j for j in range(k))
        den_roots.extend(lower[i] + j for j in range(k))
    raw = rational_x_inverse_coefficient(num_roots, den_roots)
    if isinstance(raw, (int, Fraction)):
        raw = MultivarPoly.const(2 * m, raw)
    return raw


@lru_cache(maxsize=None)
def f_k_polynomial(m: int, k: int) -> MultivarPoly:
    """Normalized character of an m-rectangle stack at a k-cycle, as a
    polynomial in p_1..p_m, q_1..q_m."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    return (-_fk_xinverse(m, k)) / k


def flipped_polynomial(poly: MultivarPoly, m: int, k: int) -> MultivarPoly:
    """(-1)^k times poly with every q_i negated; the sign convention under
    which the character data is displayed with nonnegative coefficients."""
    flipped = poly.negate_vars(range(m, 2 * m))
    return -flipped if k % 2 else flipped


def f_k_special_value(m: int, k: int) -> Fraction | int:
    """(-1)^k F_k at all p_i = 1, q_i = -1.

    Computed by specializing the rectangle dimensions before expanding (the
    coefficient ring map commutes with the series arithmetic), so large k
    stays cheap; agreement with evaluating f_k_polynomial is tested, and the
    value is the falling factorial (k+m-1)_k.
    """
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    # at p_i = 1, q_i = -1: upper root i is m - i, lower root is m - i - 1
    num_roots = list(range(k)) + [m - i + j for i in range(1, m + 1) for j in range(k)]
    den_roots = [m - i - 1 + j for i in range(1, m + 1) for j in range(k)]
    raw = rational_x_inverse_coefficient(num_roots, den_roots)
    value = Fraction(-raw, k)
    if k % 2:
        value = -value
    return int(value) if value.denominator == 1 else value


def integrality_witness(m: int, k: int) -> bool:
    """True iff every coefficient of the raw x^-1 extraction is divisible by k
    (equivalently: k * F_k has all coefficients divisible by k)."""
    raw = _fk_xinverse(m, k)
    return all(c % k == 0 for c in raw.terms.values())


def falling_factorial(n: int, k: int) -> int:
    """(n)_k = n(n-1)...(n-k+1) for integer n (n may be smaller than k)."""
    return math.prod(n - j for j in range(k))
