"""Exact truncated series arithmetic over the rationals.

Two carriers cover everything the Euler-characteristic pipeline needs:

``BivariatePoly``
    a polynomial in the formal variables ``s`` and ``y``, stored sparsely as a
    map from exponent pairs ``(s_degree, y_degree)`` to ``Fraction``, truncated
    at a fixed maximum ``s``-degree.  The ``y``-degree is never truncated; all
    inputs produced by the pipeline keep it finitely bounded per ``s``-degree.

``TSeries``
    a truncated univariate power series in ``t`` with rational coefficients,
    stored densely as a coefficient tuple of length ``order + 1``.

All coefficients are exact ``fractions.Fraction`` values; no floating point
enters this module.  Values are immutable after construction and every
operation returns a fresh object, so instances are safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = ["rational_from", "BivariatePoly", "TSeries"]


def rational_from(num: int, den: int = 1) -> Fraction:
    """Reduced rational num/den with positive denominator; sign on the numerator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class BivariatePoly:
    """Sparse polynomial in (s, y), truncated above a fixed s-degree.

    Zero coefficients are never stored, and no stored term exceeds the
    ``s_cutoff``.  Binary operations truncate to the smaller cutoff of the
    two operands.
    """

    __slots__ = ("_terms", "_s_cutoff")

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int], s_cutoff: int):
        if s_cutoff < 0:
            raise ValueError("s_cutoff must be nonnegative")
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term ({i}, {j})")
            coeff = _as_fraction(c)
            if coeff and i <= s_cutoff:
                clean[(i, j)] = coeff
        self._terms = clean
        self._s_cutoff = s_cutoff

    @classmethod
    def zero(cls, s_cutoff: int) -> BivariatePoly:
        return cls({}, s_cutoff)

    @classmethod
    def one(cls, s_cutoff: int) -> BivariatePoly:
        return cls({(0, 0): Fraction(1)}, s_cutoff)

    @property
    def s_cutoff(self) -> int:
        return self._s_cutoff

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        """Copy of the term map; mutating it does not affect the polynomial."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self._terms.items())

    def coeff(self, s_degree: int, y_degree: int) -> Fraction:
        """Stored coefficient of s^i y^j, or zero."""
        return self._terms.get((s_degree, y_degree), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._s_cutoff == other._s_cutoff and self._terms == other._terms

    def __hash__(self):
        return hash((self._s_cutoff, frozenset(self._terms.items())))

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly({k: -c for k, c in self._terms.items()}, self._s_cutoff)

    def __add__(self, other) -> BivariatePoly:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly({(0, 0): _as_fraction(other)}, self._s_cutoff)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        cutoff = min(self._s_cutoff, other._s_cutoff)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePoly(out, cutoff)

    __radd__ = __add__

    def __sub__(self, other) -> BivariatePoly:
        if isinstance(other, (int, Fraction)):
            return self + (-_as_fraction(other))
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> BivariatePoly:
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return BivariatePoly({k: c * v for k, v in self._terms.items()}, self._s_cutoff)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        cutoff = min(self._s_cutoff, other._s_cutoff)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            if i1 > cutoff:
                continue
            for (i2, j2), c2 in other._terms.items():
                i = i1 + i2
                if i > cutoff:
                    continue
                key = (i, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariatePoly(out, cutoff)

    __rmul__ = __mul__

    def exp(self) -> BivariatePoly:
        """Graded exponential sum_{k} self^k / k!, truncated at the s-cutoff.

        Requires every term to have s-degree >= 1 (in particular no constant
        term), which makes each coefficient of the result a finite sum: the
        k-th power only reaches s-degrees >= k.
        """
        if any(i == 0 for (i, _) in self._terms):
            raise ValueError("exponential not graded-finite")
        acc = BivariatePoly.one(self._s_cutoff)
        power = BivariatePoly.one(self._s_cutoff)
        for k in range(1, self._s_cutoff + 1):
            power = power * self * Fraction(1, k)
            if not power:
                break
            acc = acc + power
        return acc

    def __str__(self) -> str:
        parts = []
        for (i, j) in sorted(self._terms):
            factors = []
            if i:
                factors.append("s" if i == 1 else f"s^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(factors)
            c = self._terms[(i, j)]
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self) -> str:
        return f"BivariatePoly({self._terms!r}, s_cutoff={self._s_cutoff})"


class TSeries:
    """Univariate power series in t, truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> TSeries:
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TSeries:
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, degree: int) -> Fraction:
        if not 0 <= degree <= self.order:
            raise IndexError(f"degree {degree} outside 0..{self.order}")
        return self._coeffs[degree]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self) -> TSeries:
        return TSeries(tuple(-c for c in self._coeffs))

    def _zip(self, other: TSeries) -> int:
        # binary ops truncate to the smaller order
        return min(self.order, other.order)

    def __add__(self, other) -> TSeries:
        if isinstance(other, (int, Fraction)):
            head = (self._coeffs[0] + _as_fraction(other),)
            return TSeries(head + self._coeffs[1:])
        if not isinstance(other, TSeries):
            return NotImplemented
        n = self._zip(other)
        return TSeries(tuple(self._coeffs[m] + other._coeffs[m] for m in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other) -> TSeries:
        if isinstance(other, (int, Fraction)):
            return self + (-_as_fraction(other))
        if not isinstance(other, TSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> TSeries:
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return TSeries(tuple(c * v for v in self._coeffs))
        if not isinstance(other, TSeries):
            return NotImplemented
        n = self._zip(other)
        out = [Fraction(0)] * (n + 1)
        for p, a in enumerate(self._coeffs[: n + 1]):
            if not a:
                continue
            for q in range(n + 1 - p):
                b = other._coeffs[q]
                if b:
                    out[p + q] += a * b
        return TSeries(out)

    __rmul__ = __mul__

    def log(self) -> TSeries:
        """sum_{k>=1} (-1)^(k+1) (self - 1)^k / k, truncated at the order.

        Left inverse of :meth:`exp` on truncated series.
        """
        if self._coeffs[0] != 1:
            raise ValueError("log requires unit constant term")
        u = self - 1
        acc = TSeries.zero(self.order)
        power = TSeries.one(self.order)
        for k in range(1, self.order + 1):
            power = power * u
            acc = acc + power * Fraction((-1) ** (k + 1), k)
        return acc

    def exp(self) -> TSeries:
        """sum_{k>=0} self^k / k!, truncated; requires zero constant term."""
        if self._coeffs[0] != 0:
            raise ValueError("exponential requires zero constant term")
        acc = TSeries.one(self.order)
        power = TSeries.one(self.order)
        for k in range(1, self.order + 1):
            power = power * self * Fraction(1, k)
            acc = acc + power
        return acc

    def __str__(self) -> str:
        parts = []
        for m, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if m == 0 else ("t" if m == 1 else f"t^{m}")
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self) -> str:
        return f"TSeries({list(self._coeffs)!r})"
