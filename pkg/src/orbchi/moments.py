"""Gaussian moments and the moment substitution y^k -> Ch_k.

The k-th moment of the standard Gaussian weight equals the number of perfect
matchings (chord diagrams) on k labeled points: (k-1)!! for even k and 0 for
odd k.  That identity lets the whole computation stay in exact integer
arithmetic; no integral is ever evaluated numerically here.

The three pipeline steps living in this module:

1. ``build_exponent``   -- the vertex generating polynomial -q_n s^(n-2) y^n,
   one term per admissible valence n >= 3, in variables (s, y) with s^2 = t;
2. ``expand_h``         -- its graded exponential (disjoint unions of vertices);
3. ``substitute_moments`` -- replace each y^k by Ch_k, pairing up half-edges
   into edges, which collapses the result to a univariate series in t.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from .series import BivariatePoly, TSeries

if TYPE_CHECKING:  # pragma: no cover
    from .species import Species

__all__ = ["gaussian_moment", "moment_table", "build_exponent", "expand_h",
           "substitute_moments"]


def gaussian_moment(k: int) -> int:
    """Number of perfect matchings on k points: (k-1)!! for even k, 0 for odd."""
    if k < 0:
        raise ValueError("moment index must be nonnegative")
    if k % 2:
        return 0
    out = 1
    for odd in range(1, k, 2):
        out *= odd
    return out


def moment_table(k_max: int) -> list[int]:
    """Ch_0..Ch_k_max via the recurrence Ch_k = (k-1) * Ch_(k-2)."""
    if k_max < 0:
        raise ValueError("moment index must be nonnegative")
    values = [0] * (k_max + 1)
    values[0] = 1
    for k in range(2, k_max + 1, 2):
        values[k] = (k - 1) * values[k - 2]
    return values


def build_exponent(species: Species, s_cutoff: int) -> BivariatePoly:
    """Exponent polynomial -sum_{n>=3} q_n s^(n-2) y^n, truncated at s_cutoff.

    A vertex of valence n carries s-degree n-2, so valences up to
    s_cutoff + 2 can contribute; the species must cover that range.
    """
    species.check_coverage(s_cutoff + 2)
    terms: dict[tuple[int, int], Fraction] = {}
    for n in range(3, s_cutoff + 3):
        q = species.q(n)
        if q:
            terms[(n - 2, n)] = -q
    return BivariatePoly(terms, s_cutoff)


def expand_h(exponent: BivariatePoly) -> BivariatePoly:
    """Graded exponential of the vertex polynomial; constant term 1."""
    return exponent.exp()


def substitute_moments(p: BivariatePoly) -> TSeries:
    """Replace y^j by Ch_j and read s^(2m) as t^m.

    Every surviving term must sit in even s-degree (pipeline inputs pair the
    parities of s and y, and odd moments vanish); a nonzero term at odd
    s-degree would be a half-integer power of t and is a hard error.
    """
    if p.s_cutoff % 2:
        raise ValueError("moment substitution needs an even s_cutoff")
    out = [Fraction(0)] * (p.s_cutoff // 2 + 1)
    for (i, j), c in p.items():
        ch = gaussian_moment(j)
        if not ch:
            continue
        if i % 2:
            raise ValueError("half-integer power of t")
        out[i // 2] += c * ch
    return TSeries(out)
