"""Sparse multivariate polynomials with exact integer or rational coefficients.

Terms are stored as a dict from exponent tuples to nonzero coefficients.
Rational coefficients that are actually integers are normalized to int, so a
polynomial is integral exactly when every stored coefficient is an int.

Canonical term order (used for display and serialization): total degree
descending, ties broken lexicographically descending on the exponent tuple,
so with variables (p, q) the term p^2*q precedes p*q^2.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from fractions import Fraction

Scalar = int | Fraction


def _clean_coef(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _term_sort_key(exps: tuple[int, ...]):
    return (-sum(exps), tuple(-e for e in exps))


class MultivarPoly:
    """Polynomial in a fixed number of variables over Z or Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Scalar] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
                c = _clean_coef(c)
                if c:
                    clean[exps] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultivarPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Scalar) -> "MultivarPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultivarPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: 1})

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "MultivarPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, MultivarPoly):
            self._check_compatible(other)
            out = dict(self.terms)
            for exps, c in other.terms.items():
                out[exps] = out.get(exps, 0) + c
            return MultivarPoly(self.nvars, out)
        if isinstance(other, (int, Fraction)):
            return self + MultivarPoly.const(self.nvars, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return MultivarPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (MultivarPoly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultivarPoly):
            self._check_compatible(other)
            out: dict[tuple[int, ...], Scalar] = {}
            get = out.get
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(map(int.__add__, e1, e2))
                    out[key] = get(key, 0) + c1 * c2
            return MultivarPoly(self.nvars, out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultivarPoly.zero(self.nvars)
            return MultivarPoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self * Fraction(1, scalar)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultivarPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultivarPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: _clean_coef(other)}
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------------

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def as_constant(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self!r}")
        return self.constant_term()

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.terms), default=0)

    def homogeneous_part(self, degree: int) -> "MultivarPoly":
        return MultivarPoly(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        if len(values) != self.nvars:
            raise ValueError("value count mismatch")
        total: Scalar = 0
        for exps, c in self.terms.items():
            total += c * math.prod(v**e for v, e in zip(values, exps) if e)
        return _clean_coef(total) if isinstance(total, Fraction) else total

    def negate_vars(self, indices: Iterable[int]) -> "MultivarPoly":
        """Substitute x_i -> -x_i for each index in indices."""
        idx = set(indices)
        return MultivarPoly(
            self.nvars,
            {
                e: (-c if sum(e[i] for i in idx) % 2 else c)
                for e, c in self.terms.items()
            },
        )

    def coefficient_sum(self) -> Scalar:
        total: Scalar = sum(self.terms.values())
        return _clean_coef(total) if isinstance(total, Fraction) else total

    # -- presentation ------------------------------------------------------

    def canonical_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]))

    def to_string(self, names: Sequence[str]) -> str:
        if len(names) != self.nvars:
            raise ValueError("name count mismatch")
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, c in self.canonical_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_json_terms(self) -> list[dict]:
        """Canonically ordered [{"exp": [...], "coef": "<decimal string>"}, ...]."""
        if not self.is_integral():
            raise ValueError("JSON serialization requires integer coefficients")
        return [
            {"exp": list(exps), "coef": str(c)} for exps, c in self.canonical_terms()
        ]

    @classmethod
    def from_json_terms(cls, nvars: int, data: list[dict]) -> "MultivarPoly":
        return cls(nvars, {tuple(item["exp"]): int(item["coef"]) for item in data})

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"MultivarPoly({self.nvars}, {self.to_string(names)})"


def default_names(m: int) -> list[str]:
    """Display names for the 2m variables p_1..p_m, q_1..q_m.

    The two smallest cases use the traditional short names: (p, q) for one
    rectangle and (a, p, b, q) for two, matching the usual way these
    polynomials are written out.
    """
    if m == 1:
        return ["p", "q"]
    if m == 2:
        return ["a", "p", "b", "q"]
    return [f"p{i}" for i in range(1, m + 1)] + [f"q{i}" for i in range(1, m + 1)]
