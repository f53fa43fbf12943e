"""Fueled call-by-value evaluation over the naturals, with transition tracing.

Fuel is spent once per function-call entry, so a fuel budget bounds the
number of state transitions.  x-1 is monus: 0-1 = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .graphs import Arc, ArcKind, FunSig
from .syntax import (
    And,
    BoolExpr,
    Call,
    CallSiteId,
    CondExpr,
    Const,
    EqConst,
    EqOne,
    EqZero,
    Expr,
    If,
    Le,
    Lt,
    Not,
    Or,
    Pred,
    PrimOp,
    Program,
    Succ,
    Var,
)


class OutOfFuel(Exception):
    """The fuel budget was exhausted before evaluation finished."""


class _TraceLimit(Exception):
    pass


@dataclass
class Fuel:
    budget: int

    def spend(self) -> None:
        if self.budget <= 0:
            raise OutOfFuel()
        self.budget -= 1


def _as_fuel(fuel: Union[int, Fuel]) -> Fuel:
    return fuel if isinstance(fuel, Fuel) else Fuel(fuel)


@dataclass(frozen=True)
class State:
    fun: FunSig
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.fun.arity:
            raise ValueError(f"{self.fun.name} takes {self.fun.arity} values")


@dataclass(frozen=True)
class Transition:
    source: State
    site: CallSiteId
    target: State


_PRIM_IMPL: dict[str, Callable[[int, int], int]] = {
    "plus": lambda a, b: a + b,
    "times": lambda a, b: a * b,
    "max": max,
    "min": min,
}


class _Evaluator:
    def __init__(
        self,
        program: Program,
        fuel: Fuel,
        on_transition: Optional[Callable[[Transition], None]] = None,
    ):
        self.defs = {d.sig.name: d for d in program.defs}
        self.fuel = fuel
        self.on_transition = on_transition

    def call(self, name: str, values: tuple[int, ...]) -> int:
        d = self.defs[name]
        if len(values) != d.sig.arity:
            raise ValueError(f"{name} takes {d.sig.arity} argument(s), got {len(values)}")
        self.fuel.spend()
        env = dict(zip(d.sig.params, values))
        return self.cond(d.body, env, d.sig, values)

    def cond(self, c: CondExpr, env, sig, values) -> int:
        while isinstance(c, If):
            c = c.then if self.boolean(c.cond, env) else c.orelse
        return self.expr(c.expr, env, sig, values)

    def boolean(self, b: BoolExpr, env) -> bool:
        match b:
            case EqZero(p):
                return env[p] == 0
            case EqOne(p):
                return env[p] == 1
            case EqConst(p, v):
                return env[p] == v
            case Lt(l, r):
                return env[l] < env[r]
            case Le(l, r):
                return env[l] <= env[r]
            case And(l, r):
                # evaluate both sides; atoms have no effects
                lv, rv = self.boolean(l, env), self.boolean(r, env)
                return lv and rv
            case Or(l, r):
                lv, rv = self.boolean(l, env), self.boolean(r, env)
                return lv or rv
            case Not(operand):
                return not self.boolean(operand, env)
        raise TypeError(b)

    def expr(self, e: Expr, env, sig, values) -> int:
        match e:
            case Var(name):
                return env[name]
            case Const(value):
                return value
            case Succ(name):
                return env[name] + 1
            case Pred(name):
                v = env[name]
                return v - 1 if v > 0 else 0
            case PrimOp(op, args):
                argv = [self.expr(a, env, sig, values) for a in args]
                return _PRIM_IMPL[op](*argv)
            case Call(fun, args, label):
                argv = tuple(self.expr(a, env, sig, values) for a in args)
                if self.on_transition is not None:
                    callee = self.defs[fun].sig
                    self.on_transition(
                        Transition(State(sig, values), label, State(callee, argv))
                    )
                return self.call(fun, argv)
        raise TypeError(e)


def eval_program(
    program: Program, fun: str, args: tuple[int, ...], fuel: Union[int, Fuel]
) -> int:
    """Evaluate fun on args; raises OutOfFuel when the budget runs out."""
    if fun not in {d.sig.name for d in program.defs}:
        raise ValueError(f"no function named {fun!r}")
    return _Evaluator(program, _as_fuel(fuel)).call(fun, tuple(args))


def trace_transitions(
    program: Program,
    state: State,
    fuel: Union[int, Fuel],
    max_len: Optional[int] = None,
) -> list[Transition]:
    """The call transitions taken while evaluating from state, in order.

    The list is truncated at max_len or at fuel exhaustion.
    """
    if program.sig_named(state.fun.name) != state.fun:
        raise ValueError(f"state signature does not match the program's {state.fun.name}")
    out: list[Transition] = []

    def record(tr: Transition) -> None:
        out.append(tr)
        if max_len is not None and len(out) >= max_len:
            raise _TraceLimit()

    ev = _Evaluator(program, _as_fuel(fuel), record)
    try:
        ev.call(state.fun.name, state.values)
    except (OutOfFuel, _TraceLimit):
        pass
    return out


@dataclass(frozen=True)
class Violation:
    site: CallSiteId
    arc: Arc
    source: State
    target: State


@dataclass
class SafetyReport:
    violations: list[Violation] = field(default_factory=list)
    converged: int = 0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def sample_safety(
    program: Program,
    description,
    trials: int,
    value_bound: int,
    fuel: int,
    seed: int = 0,
) -> SafetyReport:
    """Check a description against randomly sampled executions.

    Every observed transition is checked against every arc of the graph the
    description assigns to its call site.  Trials that run out of fuel are
    counted as skipped; their completed transitions are still checked.
    """
    rng = random.Random(seed)
    report = SafetyReport()
    for _ in range(trials):
        d = rng.choice(program.defs)
        values = tuple(rng.randint(0, value_bound) for _ in d.sig.params)
        transitions: list[Transition] = []
        ev = _Evaluator(program, Fuel(fuel), transitions.append)
        try:
            ev.call(d.sig.name, values)
            report.converged += 1
        except OutOfFuel:
            report.skipped += 1
        for tr in transitions:
            graph = description[tr.site]
            for arc in graph.arcs:
                u = tr.source.values[arc.src]
                v = tr.target.values[arc.tgt]
                ok = u > v if arc.kind is ArcKind.STRICT else u >= v
                if not ok:
                    report.violations.append(Violation(tr.site, arc, tr.source, tr.target))
    return report
