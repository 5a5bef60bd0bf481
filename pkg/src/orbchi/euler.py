"""End-to-end pipeline: species -> orbifold Euler characteristic table.

The coefficient of t^m in the all-graphs series is the signed
automorphism-weighted graph count sum (-1)^v / |Aut(G)| over all graphs
(including disconnected and empty ones) with m = #edges - #vertices and
every vertex at least trivalent.  Taking the series logarithm restricts the
sum to connected graphs, where the loop number is n = m + 1; the table is
indexed by that loop number, for n = 2..max_loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .moments import build_exponent, expand_h, substitute_moments
from .series import TSeries

if TYPE_CHECKING:  # pragma: no cover
    from .species import Species

__all__ = ["EulerTable", "all_graphs_series", "connected_series",
           "euler_characteristic"]


@dataclass(frozen=True)
class EulerTable:
    """Exact Euler characteristics per loop number, with provenance."""

    species_name: str
    connected: bool
    max_loops: int
    entries: dict[int, Fraction]

    def __post_init__(self):
        expected = list(range(2, self.max_loops + 1))
        if sorted(self.entries) != expected:
            raise ValueError(
                f"table entries must cover loop numbers 2..{self.max_loops}"
            )

    def __getitem__(self, loops: int) -> Fraction:
        return self.entries[loops]


def all_graphs_series(species: Species, loops: int) -> TSeries:
    """Signed weighted count of all graphs, graded by m = edges - vertices.

    The result has order loops - 1 and constant term 1 (the empty graph).
    """
    if loops < 2:
        raise ValueError("loop order must be at least 2")
    exponent = build_exponent(species, 2 * (loops - 1))
    return substitute_moments(expand_h(exponent))


def connected_series(g: TSeries) -> TSeries:
    """Restrict an all-graphs series to connected graphs via the logarithm."""
    return g.log()


def euler_characteristic(species: Species, loops: int, connected: bool = True) -> EulerTable:
    """Euler characteristic table for loop numbers 2..loops.

    Entry n is the coefficient of t^(n-1) of the connected (default) or
    all-graphs series; connected graphs with loop number n have
    edges - vertices = n - 1.
    """
    g = all_graphs_series(species, loops)
    c = connected_series(g) if connected else g
    entries = {n: c[n - 1] for n in range(2, loops + 1)}
    return EulerTable(species.name, connected, loops, entries)
