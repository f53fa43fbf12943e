"""Size-change graphs and their composition algebra.

A size-change graph relates the parameters of a caller to the parameters of a
callee: a strict arc records "the target value is strictly smaller", a
non-strict arc records "the target value is not larger".  Finite sets of such
graphs generate a finite semigroup under composition; termination is decided
by inspecting the idempotent elements of that semigroup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence


class CompositionError(ValueError):
    """Endpoints of graphs (or of words of graphs) do not line up."""


class ArcKind(Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"

    def __repr__(self) -> str:
        return self.name


def _combine(a: ArcKind, b: ArcKind) -> ArcKind:
    # a two-step path decreases strictly as soon as one step does
    if a is ArcKind.STRICT or b is ArcKind.STRICT:
        return ArcKind.STRICT
    return ArcKind.NONSTRICT


@dataclass(frozen=True)
class FunSig:
    """A function name together with its ordered parameter list."""

    name: str
    params: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.params:
            raise ValueError(f"function {self.name!r} needs at least one parameter")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"function {self.name!r} has repeated parameters")

    @property
    def arity(self) -> int:
        return len(self.params)

    def index_of(self, param: str) -> int:
        try:
            return self.params.index(param)
        except ValueError:
            raise ValueError(f"{param!r} is not a parameter of {self.name}") from None


@dataclass(frozen=True)
class Arc:
    src: int
    kind: ArcKind
    tgt: int


@dataclass(frozen=True)
class SizeChangeGraph:
    """Bipartite arc set between the parameters of two signatures.

    Arcs are kept sorted by (src, tgt) with at most one arc per pair, so
    equality and hashing are structural.
    """

    source: FunSig
    target: FunSig
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        arcs = tuple(sorted(self.arcs, key=lambda a: (a.src, a.tgt)))
        seen: set[tuple[int, int]] = set()
        for a in arcs:
            if not (0 <= a.src < self.source.arity and 0 <= a.tgt < self.target.arity):
                raise ValueError(
                    f"arc {a.src}->{a.tgt} out of range for "
                    f"{self.source.name}->{self.target.name}"
                )
            if (a.src, a.tgt) in seen:
                raise ValueError(f"two arcs between parameters {a.src} and {a.tgt}")
            seen.add((a.src, a.tgt))
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_names(
        cls,
        source: FunSig,
        target: FunSig,
        arcs: Iterable[tuple[str, str, str]],
    ) -> "SizeChangeGraph":
        """Build a graph from (param, "strict" | "nonstrict", param) triples."""
        return cls(
            source,
            target,
            tuple(
                Arc(source.index_of(s), ArcKind(kind), target.index_of(t))
                for s, kind, t in arcs
            ),
        )

    def arc_between(self, src: int, tgt: int) -> Optional[Arc]:
        for a in self.arcs:
            if a.src == src and a.tgt == tgt:
                return a
        return None

    def strict_self_params(self) -> tuple[int, ...]:
        return tuple(
            a.src for a in self.arcs if a.src == a.tgt and a.kind is ArcKind.STRICT
        )

    def has_strict_self_arc(self) -> bool:
        return bool(self.strict_self_params())

    def __str__(self) -> str:
        rel = {ArcKind.STRICT: ">", ArcKind.NONSTRICT: ">="}
        body = ", ".join(
            f"{self.source.params[a.src]}{rel[a.kind]}{self.target.params[a.tgt]}"
            for a in self.arcs
        )
        return f"{self.source.name}->{self.target.name}{{{body}}}"


def compose(g0: SizeChangeGraph, g1: SizeChangeGraph) -> SizeChangeGraph:
    """Compose two graphs along their shared middle signature.

    The result has an arc x->z whenever some middle parameter y links them;
    the arc is strict if any linking pair has a strict step, and non-strict
    only if every linking pair is non-strict on both steps.
    """
    if g0.target != g1.source:
        raise CompositionError(
            f"cannot compose {g0.source.name}->{g0.target.name} "
            f"with {g1.source.name}->{g1.target.name}"
        )
    by_src: dict[int, list[Arc]] = {}
    for b in g1.arcs:
        by_src.setdefault(b.src, []).append(b)
    best: dict[tuple[int, int], ArcKind] = {}
    for a in g0.arcs:
        for b in by_src.get(a.tgt, ()):
            kind = _combine(a.kind, b.kind)
            key = (a.src, b.tgt)
            if best.get(key) is not ArcKind.STRICT:
                best[key] = kind
    arcs = tuple(Arc(s, k, t) for (s, t), k in sorted(best.items()))
    return SizeChangeGraph(g0.source, g1.target, arcs)


def compose_all(graphs: Sequence[SizeChangeGraph]) -> SizeChangeGraph:
    if not graphs:
        raise CompositionError("cannot compose an empty word")
    acc = graphs[0]
    for g in graphs[1:]:
        acc = compose(acc, g)
    return acc


def is_idempotent(g: SizeChangeGraph) -> bool:
    return g.source == g.target and compose(g, g) == g


def idempotent_power(g: SizeChangeGraph) -> tuple[SizeChangeGraph, int]:
    """Return the unique idempotent among the powers of g, with its exponent.

    The cyclic semigroup generated by g has at most 3**(arity**2) elements,
    so the least idempotent exponent is bounded by that count.
    """
    if g.source != g.target:
        raise CompositionError("only graphs with equal source and target have powers")
    bound = 3 ** (g.source.arity ** 2)
    power = g
    for exponent in range(1, bound + 1):
        if compose(power, power) == power:
            return power, exponent
        power = compose(power, g)
    raise AssertionError("no idempotent power within the semigroup bound")


@dataclass(frozen=True)
class GraphSet:
    """A finite indexed family of graphs over a shared set of signatures."""

    sigs: tuple[FunSig, ...]
    graphs: tuple[SizeChangeGraph, ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.graphs):
            raise ValueError("need exactly one name per graph")
        if len(set(self.names)) != len(self.names):
            raise ValueError("graph names must be distinct")
        if len({s.name for s in self.sigs}) != len(self.sigs):
            raise ValueError("function names must be distinct")
        for g in self.graphs:
            if g.source not in self.sigs or g.target not in self.sigs:
                raise ValueError("graph endpoints must be drawn from the listed signatures")

    @classmethod
    def of(
        cls,
        graphs: Iterable[SizeChangeGraph],
        names: Optional[Iterable[str]] = None,
        sigs: Optional[Iterable[FunSig]] = None,
    ) -> "GraphSet":
        graphs = tuple(graphs)
        if sigs is None:
            found: list[FunSig] = []
            for g in graphs:
                for sig in (g.source, g.target):
                    if sig not in found:
                        found.append(sig)
            sigs = found
        if names is None:
            names = tuple(f"g{i}" for i in range(len(graphs)))
        return cls(tuple(sigs), graphs, tuple(names))

    def __len__(self) -> int:
        return len(self.graphs)

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def index_of(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"no graph named {name!r}") from None

    def sig_named(self, name: str) -> FunSig:
        for sig in self.sigs:
            if sig.name == name:
                return sig
        raise KeyError(f"no function named {name!r}")

    def word_names(self, word: Iterable[int]) -> list[str]:
        return [self.names[i] for i in word]


@dataclass(frozen=True)
class DerivedGraph:
    """A closure element together with a word of base-graph indices that composes to it."""

    graph: SizeChangeGraph
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Closure:
    elements: tuple[DerivedGraph, ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def witness_bound(self) -> int:
        return max(len(dg.witness) for dg in self.elements)

    @cached_property
    def graphs(self) -> frozenset[SizeChangeGraph]:
        return frozenset(dg.graph for dg in self.elements)


def closure(gs: GraphSet) -> Closure:
    """Close a graph set under composition, tracking a witness word per element.

    Breadth-first extension by base graphs visits candidate words in shortlex
    order, so each element carries the shortlex-least witness among the
    derivations the fixpoint discovers, and the result is deterministic.
    """
    if not gs.graphs:
        raise ValueError("cannot close an empty graph set")
    seen: dict[SizeChangeGraph, tuple[int, ...]] = {}
    order: list[DerivedGraph] = []
    queue: deque[DerivedGraph] = deque()
    for i, g in enumerate(gs.graphs):
        if g not in seen:
            dg = DerivedGraph(g, (i,))
            seen[g] = dg.witness
            order.append(dg)
            queue.append(dg)
    while queue:
        dg = queue.popleft()
        for j, base in enumerate(gs.graphs):
            if dg.graph.target != base.source:
                continue
            comp = compose(dg.graph, base)
            if comp not in seen:
                nd = DerivedGraph(comp, dg.witness + (j,))
                seen[comp] = nd.witness
                order.append(nd)
                queue.append(nd)
    return Closure(tuple(order))


@dataclass(frozen=True)
class LassoMultipath:
    """An ultimately periodic multipath: a finite prefix word and a repeated period word."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("lasso period must be nonempty")

    def graph_index_at(self, position: int) -> int:
        if position < len(self.prefix):
            return self.prefix[position]
        return self.period[(position - len(self.prefix)) % len(self.period)]


@dataclass(frozen=True)
class DescentWitness:
    """A parameter that decreases strictly once per block of periods, forever."""

    param: int
    start: int
    block_len: int


@dataclass(frozen=True)
class Verdict:
    """Outcome of the termination criterion.

    On failure carries the first closure idempotent without a strict self-arc
    (in shortlex witness order) and the lasso repeating its witness word.
    """

    sct: bool
    failing_idempotent: Optional[DerivedGraph] = None
    lasso: Optional[LassoMultipath] = None


def _check_lasso(lasso: LassoMultipath, gs: GraphSet) -> None:
    word = lasso.prefix + lasso.period + lasso.period
    for i in word:
        if not 0 <= i < len(gs.graphs):
            raise CompositionError(f"graph index {i} out of range")
    for a, b in zip(word, word[1:]):
        if gs.graphs[a].target != gs.graphs[b].source:
            raise CompositionError(
                f"lasso word is not composable at {gs.names[a]};{gs.names[b]}"
            )


def decide_periodic_descent(
    lasso: LassoMultipath, gs: GraphSet
) -> Optional[DescentWitness]:
    """Decide whether the infinite multipath prefix.period^w has infinite descent.

    The period composition generates a finite cyclic semigroup; the multipath
    has a thread with infinitely many strict arcs exactly when the idempotent
    power of that composition has a strict self-arc.
    """
    _check_lasso(lasso, gs)
    value = compose_all([gs.graphs[i] for i in lasso.period])
    stable, exponent = idempotent_power(value)
    strict = stable.strict_self_params()
    if not strict:
        return None
    return DescentWitness(param=strict[0], start=len(lasso.prefix), block_len=exponent)


def periodic_descent_params(lasso: LassoMultipath, gs: GraphSet) -> tuple[int, ...]:
    """All parameters that admit a periodic descent in the given lasso."""
    _check_lasso(lasso, gs)
    value = compose_all([gs.graphs[i] for i in lasso.period])
    stable, _ = idempotent_power(value)
    return stable.strict_self_params()


def check_sct_criterion(gs: GraphSet, cl: Optional[Closure] = None) -> Verdict:
    """Terminating iff every idempotent in the closure has a strict self-arc."""
    if not gs.graphs:
        return Verdict(True)
    if cl is None:
        cl = closure(gs)
    for dg in cl.elements:
        g = dg.graph
        if g.source == g.target and is_idempotent(g) and not g.has_strict_self_arc():
            lasso = LassoMultipath((), dg.witness)
            # a failing idempotent must also be descent-free as a lasso
            assert decide_periodic_descent(lasso, gs) is None
            return Verdict(False, failing_idempotent=dg, lasso=lasso)
    return Verdict(True)


def induced_pair_coloring(
    lasso: LassoMultipath, gs: GraphSet, i: int, j: int
) -> SizeChangeGraph:
    """Composition of the unrolled multipath graphs at positions i..j-1."""
    if i >= j:
        raise ValueError("need i < j")
    _check_lasso(lasso, gs)
    return compose_all([gs.graphs[lasso.graph_index_at(t)] for t in range(i, j)])
