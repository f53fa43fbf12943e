"""Finite stand-ins for infinite colorings.

A coloring of the naturals is represented as eventually periodic (prefix +
repeated period), which makes "occurs infinitely often" decidable: a color
recurs forever iff it occurs in the period.  Pair colorings live on a finite
initial segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graphs import GraphSet, LassoMultipath, SizeChangeGraph, induced_pair_coloring


@dataclass(frozen=True)
class EPColoring:
    """Eventually periodic coloring of the naturals in k colors."""

    k: int
    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(not 0 <= c < self.k for c in self.prefix + self.period):
            raise ValueError(f"colors must be below {self.k}")

    def at(self, x: int) -> int:
        if x < len(self.prefix):
            return self.prefix[x]
        return self.period[(x - len(self.prefix)) % len(self.period)]


def spp_witness(c: EPColoring) -> frozenset[int]:
    """The set of colors taken infinitely often: exactly the period's colors."""
    return frozenset(c.period)


@dataclass
class PairColoring:
    """A coloring of the pairs {(i, j): i < j < n} in k colors."""

    k: int
    n: int
    values: dict[tuple[int, int], int]

    @classmethod
    def from_function(cls, k: int, n: int, fn: Callable[[int, int], int]) -> "PairColoring":
        values = {(i, j): fn(i, j) for i in range(n) for j in range(i + 1, n)}
        if any(not 0 <= v < k for v in values.values()):
            raise ValueError(f"colors must be below {k}")
        return cls(k, n, values)

    def at(self, i: int, j: int) -> int:
        return self.values[(i, j)]


@dataclass(frozen=True)
class StarWitness:
    center: int
    color: int
    pairs: tuple[tuple[int, int], ...]


def star_search(c: PairColoring, min_triangles: int) -> Optional[StarWitness]:
    """Find a vertex anchoring at least min_triangles monochromatic triangles.

    Returns the smallest center t (then the smallest color) such that
    c(t,m) = c(t,l) = c(m,l) for enough pairs t < m < l.  Exhaustive.
    """
    for t in range(c.n):
        for color in range(c.k):
            pairs = tuple(
                (m, l)
                for m in range(t + 1, c.n)
                for l in range(m + 1, c.n)
                if c.at(t, m) == color and c.at(t, l) == color and c.at(m, l) == color
            )
            if len(pairs) >= min_triangles:
                return StarWitness(t, color, pairs)
    return None


def pair_coloring_from_lasso(
    lasso: LassoMultipath, gs: GraphSet, n: int
) -> tuple[PairColoring, list[SizeChangeGraph]]:
    """Color each pair i < j < n by the multipath composition over [i, j).

    Colors are palette indices; the palette lists the distinct composed
    graphs in order of first appearance.
    """
    palette: list[SizeChangeGraph] = []
    index: dict[SizeChangeGraph, int] = {}
    values: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            g = induced_pair_coloring(lasso, gs, i, j)
            if g not in index:
                index[g] = len(palette)
                palette.append(g)
            values[(i, j)] = index[g]
    return PairColoring(len(palette), n, values), palette
