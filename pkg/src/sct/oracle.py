"""Independent bounded brute-force check of the termination criterion.

Enumerates every composable cyclic word up to a length bound and tests the
idempotent power of its composition for a strict self-arc.  Used to
cross-validate the closure-based criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import (
    GraphSet,
    LassoMultipath,
    compose_all,
    idempotent_power,
)


@dataclass(frozen=True)
class OracleReport:
    counterexample: Optional[LassoMultipath]
    max_len: int
    words_checked: int

    @property
    def refuted(self) -> bool:
        return self.counterexample is not None


def enumerate_cyclic_words(gs: GraphSet, max_len: int) -> Iterator[tuple[int, ...]]:
    """All composable cyclic words over base-graph indices, in shortlex order."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    graphs = gs.graphs

    def extend(word: tuple[int, ...], length: int) -> Iterator[tuple[int, ...]]:
        if len(word) == length:
            if graphs[word[-1]].target == graphs[word[0]].source:
                yield word
            return
        for j in range(len(graphs)):
            if word and graphs[word[-1]].target != graphs[j].source:
                continue
            yield from extend(word + (j,), length)

    for length in range(1, max_len + 1):
        yield from extend((), length)


def bounded_lasso_oracle(gs: GraphSet, max_len: int) -> OracleReport:
    """Search cyclic words for a descent-free repetition.

    A word whose composition has an idempotent power without a strict
    self-arc yields an infinite multipath without infinite descent.
    """
    checked = 0
    for word in enumerate_cyclic_words(gs, max_len):
        checked += 1
        value = compose_all([gs.graphs[i] for i in word])
        stable, _ = idempotent_power(value)
        if not stable.has_strict_self_arc():
            return OracleReport(LassoMultipath((), word), max_len, checked)
    return OracleReport(None, max_len, checked)
