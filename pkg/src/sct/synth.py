"""Compile a graph set into a program whose extracted description is that set.

Every function is padded to a common arity with parameters x0..x{n-1}.  A
function with k outgoing graphs dispatches on x0 = 0, x0 = 1, ..., x0 = k-2
with the final branch as the last else; branch h calls the target of its
graph with x_s-1 for a strict arc into position j, x_s for a non-strict arc,
and x_j+1 where no arc enters j.  Guard-blind extraction inverts this
construction exactly.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .graphs import ArcKind, FunSig, GraphSet, SizeChangeGraph
from .syntax import (
    Call,
    CondExpr,
    EqConst,
    EqOne,
    EqZero,
    Expr,
    FunDef,
    If,
    Leaf,
    Pred,
    Program,
    Succ,
    Var,
    label_program,
)


class SynthesisError(ValueError):
    """The graph set cannot be compiled (two sources feed one target parameter)."""


def _guard(param: str, value: int):
    if value == 0:
        return EqZero(param)
    if value == 1:
        return EqOne(param)
    return EqConst(param, value)


def _branch_call(graph: SizeChangeGraph, params: tuple[str, ...], arity: int) -> Expr:
    incoming: dict[int, tuple[int, ArcKind]] = {}
    for a in graph.arcs:
        if a.tgt in incoming:
            raise SynthesisError(
                f"two arcs into parameter {a.tgt} of {graph.target.name}"
            )
        incoming[a.tgt] = (a.src, a.kind)
    args: list[Expr] = []
    for j in range(arity):
        entry = incoming.get(j)
        if entry is None:
            args.append(Succ(params[j]))
        else:
            src, kind = entry
            args.append(Pred(params[src]) if kind is ArcKind.STRICT else Var(params[src]))
    return Call(graph.target.name, tuple(args))


def synthesize(gs: GraphSet) -> Program:
    """Build the dispatch program realizing a nonempty graph set."""
    if not gs.sigs:
        raise ValueError("cannot synthesize from an empty graph set")
    arity = max(sig.arity for sig in gs.sigs)
    params = tuple(f"x{j}" for j in range(arity))
    defs = []
    for sig in gs.sigs:
        outgoing = [g for g in gs.graphs if g.source == sig]
        body: CondExpr
        if not outgoing:
            body = Leaf(Var(params[0]))
        else:
            body = Leaf(_branch_call(outgoing[-1], params, arity))
            for h in range(len(outgoing) - 2, -1, -1):
                body = If(
                    _guard(params[0], h),
                    Leaf(_branch_call(outgoing[h], params, arity)),
                    body,
                )
        defs.append(FunDef(FunSig(sig.name, params), body))
    return label_program(Program(tuple(defs)))


def graph_multiset(graphs: Iterable[SizeChangeGraph]) -> Counter:
    """Multiset of graphs keyed by endpoint names and index-level arcs.

    Padding parameters never carry arcs, so this key is stable across the
    arity padding that synthesis introduces.
    """
    return Counter((g.source.name, g.target.name, g.arcs) for g in graphs)
