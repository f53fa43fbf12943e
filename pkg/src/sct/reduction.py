"""Graph families that turn recurring-color questions into descent questions.

For k colors, one parameter z_I is kept per nonempty subset I of the colors.
A choice state tracks, per subset, a currently chosen color that cycles
through the subset as colors are observed; a subset is "active" when its
choice sits at the end of the cycle and the observed color restarts it.
Feeding an eventually periodic coloring through this machine produces an
ultimately periodic multipath whose unique descent parameter is z_I* for
I* = the set of colors that recur forever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .colorings import EPColoring, spp_witness
from .graphs import Arc, ArcKind, FunSig, GraphSet, LassoMultipath, SizeChangeGraph


@dataclass(frozen=True)
class IndexSet:
    """A nonempty set of colors; the ascending tuple doubles as its fixed enumeration."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("index set must be nonempty")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly ascending")

    @classmethod
    def of(cls, colors) -> "IndexSet":
        return cls(tuple(sorted(set(colors))))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def first(self) -> int:
        return self.members[0]

    @property
    def last(self) -> int:
        return self.members[-1]

    def param_name(self) -> str:
        return "z" + "".join(str(i) for i in self.members)


@lru_cache(maxsize=None)
def index_sets(k: int) -> tuple[IndexSet, ...]:
    """All nonempty subsets of the colors, ordered by (size, lexicographic)."""
    if k < 1:
        raise ValueError("need at least one color")
    sets = [
        IndexSet(combo)
        for size in range(1, k + 1)
        for combo in itertools.combinations(range(k), size)
    ]
    return tuple(sets)


@lru_cache(maxsize=None)
def family_signature(k: int) -> FunSig:
    return FunSig("f", tuple(s.param_name() for s in index_sets(k)))


@dataclass(frozen=True)
class ChoiceState:
    """One chosen color per index set, always a member of that set."""

    k: int
    choices: tuple[int, ...]  # aligned with index_sets(k)

    def __post_init__(self) -> None:
        sets = index_sets(self.k)
        if len(self.choices) != len(sets):
            raise ValueError("need one choice per index set")
        for s, c in zip(sets, self.choices):
            if c not in s.members:
                raise ValueError(f"choice {c} is not in {s.members}")

    def chi(self, index_set: IndexSet) -> int:
        return self.choices[index_sets(self.k).index(index_set)]


def initial_chi(k: int) -> ChoiceState:
    return ChoiceState(k, tuple(s.first for s in index_sets(k)))


def chi_step(state: ChoiceState, observed: int) -> ChoiceState:
    """Advance each per-subset choice on an observed color.

    A choice moves to the observed color exactly when that color is the next
    element of the subset's cyclic enumeration; singleton subsets never move.
    """
    if not 0 <= observed < state.k:
        raise ValueError(f"color {observed} out of range")
    new = []
    for s, current in zip(index_sets(state.k), state.choices):
        if s.size == 1:
            new.append(s.first)
            continue
        position = s.members.index(current)
        succ = s.members[(position + 1) % s.size]
        new.append(observed if succ == observed else current)
    return ChoiceState(state.k, tuple(new))


def active_sets(state: ChoiceState, color: int) -> frozenset[IndexSet]:
    """Subsets whose choice is at enumeration end and whose least element is the color."""
    return frozenset(
        s
        for s, current in zip(index_sets(state.k), state.choices)
        if current == s.last and s.first == color
    )


def graph_for(state: ChoiceState, color: int) -> SizeChangeGraph:
    """The size-change graph one (choice state, color) step contributes.

    With m the largest active-subset size: strict self-arc on z_I for active
    I of size m, non-strict self-arc on inactive z_I of size >= m, no other
    arcs.
    """
    k = state.k
    active = active_sets(state, color)
    m = max(s.size for s in active)
    sig = family_signature(k)
    arcs = []
    for p, s in enumerate(index_sets(k)):
        if s in active and s.size == m:
            arcs.append(Arc(p, ArcKind.STRICT, p))
        elif s not in active and s.size >= m:
            arcs.append(Arc(p, ArcKind.NONSTRICT, p))
    return SizeChangeGraph(sig, sig, tuple(arcs))


def spp_reduction_family(k: int) -> GraphSet:
    """Materialize the graphs of every (choice function, color) pair, deduplicated.

    Capped at k <= 3: the number of choice functions grows as the product of
    all subset sizes.  Use graph_for for single graphs at larger k.
    """
    if not 1 <= k <= 3:
        raise ValueError("full materialization is supported for 1 <= k <= 3")
    sets = index_sets(k)
    graphs: list[SizeChangeGraph] = []
    seen: set[SizeChangeGraph] = set()
    for combo in itertools.product(*[s.members for s in sets]):
        state = ChoiceState(k, combo)
        for color in range(k):
            g = graph_for(state, color)
            if g not in seen:
                seen.add(g)
                graphs.append(g)
    return GraphSet.of(graphs)


def warmup_family() -> GraphSet:
    """The three-graph family on z0, z1, z2: graph i is strict on z_i, non-strict above."""
    sig = FunSig("f", ("z0", "z1", "z2"))
    graphs = []
    for i in range(3):
        arcs = [Arc(i, ArcKind.STRICT, i)]
        arcs += [Arc(j, ArcKind.NONSTRICT, j) for j in range(i + 1, 3)]
        graphs.append(SizeChangeGraph(sig, sig, tuple(arcs)))
    return GraphSet.of(graphs, names=("G0", "G1", "G2"))


@dataclass(frozen=True)
class ReversalRun:
    """An eventually periodic multipath driven by a coloring, cut at a state repeat."""

    lasso: LassoMultipath
    graphs: GraphSet
    actives: tuple[frozenset[IndexSet], ...]  # one entry per prefix+period position

    @property
    def period_actives(self) -> tuple[frozenset[IndexSet], ...]:
        return self.actives[len(self.lasso.prefix):]


def build_reversal_multipath(c: EPColoring) -> ReversalRun:
    """Drive the choice machine with the coloring until the joint state repeats.

    The joint state is (choice state, position in the coloring's automaton);
    it is finite, so the run is cut into a prefix and a cyclic period.
    """
    k = c.k
    prefix_len, period_len = len(c.prefix), len(c.period)

    def pos(x: int) -> int:
        return x if x < prefix_len else prefix_len + (x - prefix_len) % period_len

    state = initial_chi(k)
    seen: dict[tuple[tuple[int, ...], int], int] = {}
    steps: list[tuple[SizeChangeGraph, frozenset[IndexSet]]] = []
    x = 0
    while True:
        key = (state.choices, pos(x))
        if key in seen:
            start = seen[key]
            break
        seen[key] = x
        color = c.at(x)
        steps.append((graph_for(state, color), active_sets(state, color)))
        state = chi_step(state, color)
        x += 1

    distinct: list[SizeChangeGraph] = []
    index: dict[SizeChangeGraph, int] = {}
    word = []
    for g, _ in steps:
        if g not in index:
            index[g] = len(distinct)
            distinct.append(g)
        word.append(index[g])
    lasso = LassoMultipath(tuple(word[:start]), tuple(word[start:]))
    return ReversalRun(lasso, GraphSet.of(distinct), tuple(a for _, a in steps))


def recurring_vs_active(c: EPColoring, index_set: IndexSet) -> tuple[bool, bool]:
    """Two views of "this subset matters forever", returned side by side.

    Left: every color of the subset recurs in the coloring.  Right: the
    subset is active at some step of the detected cycle.  The two agree.
    """
    run = build_reversal_multipath(c)
    recurs = set(index_set.members) <= spp_witness(c)
    active = any(index_set in a for a in run.period_actives)
    return recurs, active
