"""AST for the first-order functional language over the naturals.

Arithmetic expressions are parameters, +1/-1 on a parameter, primitive
operator applications, function calls, and literal constants (a grammar
extension; call arguments such as constant 1 need them).  Conditions branch
on parameter comparisons.  All values are naturals; x-1 is monus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .graphs import FunSig

CallSiteId = int

PRIM_OPS = ("plus", "times", "max", "min")  # all binary, total on the naturals


# --- arithmetic expressions -------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Succ:
    name: str


@dataclass(frozen=True)
class Pred:
    name: str


@dataclass(frozen=True)
class PrimOp:
    op: str
    args: tuple["Expr", ...]


@dataclass(frozen=True)
class Call:
    fun: str
    args: tuple["Expr", ...]
    label: CallSiteId = -1


Expr = Union[Var, Const, Succ, Pred, PrimOp, Call]


# --- boolean expressions ----------------------------------------------------

@dataclass(frozen=True)
class EqZero:
    param: str


@dataclass(frozen=True)
class EqOne:
    param: str


@dataclass(frozen=True)
class EqConst:
    # equality with a literal >= 0; extends the two base equality atoms
    param: str
    value: int


@dataclass(frozen=True)
class Lt:
    left: str
    right: str


@dataclass(frozen=True)
class Le:
    left: str
    right: str


@dataclass(frozen=True)
class And:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Or:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Not:
    operand: "BoolExpr"


BoolExpr = Union[EqZero, EqOne, EqConst, Lt, Le, And, Or, Not]


# --- conditionals, definitions, programs -------------------------------------

@dataclass(frozen=True)
class Leaf:
    expr: Expr


@dataclass(frozen=True)
class If:
    cond: BoolExpr
    then: "CondExpr"
    orelse: "CondExpr"


CondExpr = Union[Leaf, If]


@dataclass(frozen=True)
class FunDef:
    sig: FunSig
    body: CondExpr


@dataclass(frozen=True)
class Program:
    defs: tuple[FunDef, ...]
    initial: int = 0

    def sig_named(self, name: str) -> FunSig:
        for d in self.defs:
            if d.sig.name == name:
                return d.sig
        raise KeyError(f"no function named {name!r}")

    def def_named(self, name: str) -> FunDef:
        for d in self.defs:
            if d.sig.name == name:
                return d
        raise KeyError(f"no function named {name!r}")


def label_program(program: Program) -> Program:
    """Assign call-site labels in document order (pre-order, left to right)."""
    counter = itertools.count()

    def expr(e: Expr) -> Expr:
        match e:
            case Call(fun, args, _):
                label = next(counter)  # parent before its arguments
                return Call(fun, tuple(expr(a) for a in args), label)
            case PrimOp(op, args):
                return PrimOp(op, tuple(expr(a) for a in args))
            case _:
                return e

    def cond(c: CondExpr) -> CondExpr:
        match c:
            case Leaf(e):
                return Leaf(expr(e))
            case If(b, t, o):
                return If(b, cond(t), cond(o))
        raise TypeError(c)

    defs = tuple(FunDef(d.sig, cond(d.body)) for d in program.defs)
    return Program(defs, program.initial)


# --- pretty printing ----------------------------------------------------------

def format_expr(e: Expr) -> str:
    match e:
        case Var(name):
            return name
        case Const(value):
            return str(value)
        case Succ(name):
            return f"{name}+1"
        case Pred(name):
            return f"{name}-1"
        case PrimOp(op, args):
            return f"{op}({', '.join(format_expr(a) for a in args)})"
        case Call(fun, args, _):
            return f"{fun}({', '.join(format_expr(a) for a in args)})"
    raise TypeError(e)


_OR, _AND, _NOT = 1, 2, 3


def _format_bool(b: BoolExpr, parent: int) -> str:
    match b:
        case EqZero(p):
            return f"{p}=0"
        case EqOne(p):
            return f"{p}=1"
        case EqConst(p, v):
            return f"{p}={v}"
        case Lt(l, r):
            return f"{l}<{r}"
        case Le(l, r):
            return f"{l}<={r}"
        case And(l, r):
            text = f"{_format_bool(l, _AND)} && {_format_bool(r, _NOT)}"
            return f"({text})" if parent > _AND else text
        case Or(l, r):
            text = f"{_format_bool(l, _OR)} || {_format_bool(r, _AND)}"
            return f"({text})" if parent > _OR else text
        case Not(operand):
            return f"!{_format_bool(operand, _NOT + 1)}"
    raise TypeError(b)


def format_bool(b: BoolExpr) -> str:
    return _format_bool(b, 0)


def format_cond(c: CondExpr) -> str:
    match c:
        case Leaf(e):
            return format_expr(e)
        case If(b, t, o):
            return f"if {format_bool(b)} then {format_cond(t)} else {format_cond(o)}"
    raise TypeError(c)


def format_def(d: FunDef) -> str:
    return f"{d.sig.name}({', '.join(d.sig.params)}) = {format_cond(d.body)}"


def format_program(p: Program) -> str:
    return "\n".join(format_def(d) for d in p.defs) + "\n"
