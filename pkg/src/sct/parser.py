"""Lexer, parser, and validator for the .sct program syntax.

Concrete syntax: keywords if/then/else; connectives &&, || and !; comparisons
<, <=; equality atoms x=0, x=1 and the extension x=c; definitions separated
by newlines or ';' (a definition is self-delimiting, so plain juxtaposition
also works); comments run from '#' to end of line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import FunSig
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
    FunDef,
    If,
    Le,
    Leaf,
    Lt,
    Not,
    Or,
    Pred,
    PrimOp,
    Program,
    PRIM_OPS,
    Succ,
    Var,
    label_program,
)


class SourceError(Exception):
    """Base class for problems with program text."""


@dataclass(frozen=True)
class Diagnostic:
    message: str
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class ParseError(SourceError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class ValidationError(SourceError):
    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


_KEYWORDS = {"if", "then", "else"}
_PUNCT = {"(", ")", ",", ";", "=", "+", "-", "<", "<=", "&&", "||", "!"}


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "number", "eof", or a punctuation string
    text: str
    line: int
    col: int


def _lex(text: str) -> Iterator[_Token]:
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in _KEYWORDS else "ident"
            yield _Token(kind, word, line, start_col)
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield _Token("number", text[i:j], line, start_col)
            col += j - i
            i = j
            continue
        two = text[i : i + 2]
        if two in ("<=", "&&", "||"):
            yield _Token(two, two, line, start_col)
            i += 2
            col += 2
            continue
        if c in "(),;=+-<!":
            yield _Token(c, c, line, start_col)
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, start_col)
    yield _Token("eof", "", line, col)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_lex(text))
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []
        self.deferred_calls: list[tuple[str, int, int, int]] = []
        self.params: tuple[str, ...] = ()

    # -- token plumbing

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {what}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return self.advance()

    def report(self, message: str, tok: _Token) -> None:
        self.diagnostics.append(Diagnostic(message, tok.line, tok.col))

    # -- grammar

    def program(self) -> Program:
        defs: list[FunDef] = []
        headers: list[_Token] = []
        while self.peek().kind == ";":
            self.advance()
        if self.peek().kind == "eof":
            tok = self.peek()
            raise ParseError("empty program", tok.line, tok.col)
        while self.peek().kind != "eof":
            d, header = self.definition()
            defs.append(d)
            headers.append(header)
            while self.peek().kind == ";":
                self.advance()
        table: dict[str, FunSig] = {}
        for d, header in zip(defs, headers):
            if d.sig.name in table:
                self.report(f"duplicate function name {d.sig.name!r}", header)
            else:
                table[d.sig.name] = d.sig
        for fun, nargs, line, col in self.deferred_calls:
            sig = table.get(fun)
            if sig is None:
                self.diagnostics.append(
                    Diagnostic(f"call to undefined function {fun!r}", line, col)
                )
            elif sig.arity != nargs:
                self.diagnostics.append(
                    Diagnostic(
                        f"{fun} expects {sig.arity} argument(s), got {nargs}",
                        line,
                        col,
                    )
                )
        if self.diagnostics:
            raise ValidationError(self.diagnostics)
        return label_program(Program(tuple(defs)))

    def definition(self) -> tuple[FunDef, _Token]:
        header = self.expect("ident", "a function definition")
        self.expect("(", "'('")
        params = [self.expect("ident", "a parameter name").text]
        while self.peek().kind == ",":
            self.advance()
            params.append(self.expect("ident", "a parameter name").text)
        close = self.expect(")", "')'")
        if len(set(params)) != len(params):
            raise ValidationError(
                [Diagnostic(f"duplicate parameter in {header.text!r}", header.line, header.col)]
            )
        self.expect("=", "'='")
        self.params = tuple(params)
        body = self.cond_expr()
        del close
        return FunDef(FunSig(header.text, tuple(params)), body), header

    def cond_expr(self) -> CondExpr:
        if self.peek().kind == "if":
            self.advance()
            cond = self.bool_expr()
            self.expect("then", "'then'")
            then = self.cond_expr()
            self.expect("else", "'else'")
            orelse = self.cond_expr()
            return If(cond, then, orelse)
        return Leaf(self.arith_expr())

    def bool_expr(self) -> BoolExpr:
        node = self.bool_and()
        while self.peek().kind == "||":
            self.advance()
            node = Or(node, self.bool_and())
        return node

    def bool_and(self) -> BoolExpr:
        node = self.bool_not()
        while self.peek().kind == "&&":
            self.advance()
            node = And(node, self.bool_not())
        return node

    def bool_not(self) -> BoolExpr:
        if self.peek().kind == "!":
            self.advance()
            return Not(self.bool_not())
        return self.bool_atom()

    def bool_atom(self) -> BoolExpr:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            node = self.bool_expr()
            self.expect(")", "')'")
            return node
        name = self.expect("ident", "a comparison").text
        self.check_param(name, tok)
        op = self.peek()
        if op.kind == "=":
            self.advance()
            lit = self.expect("number", "a literal")
            value = int(lit.text)
            if value == 0:
                return EqZero(name)
            if value == 1:
                return EqOne(name)
            return EqConst(name, value)
        if op.kind in ("<", "<="):
            self.advance()
            right_tok = self.peek()
            right = self.expect("ident", "a parameter name").text
            self.check_param(right, right_tok)
            return Lt(name, right) if op.kind == "<" else Le(name, right)
        raise ParseError(f"expected '=', '<' or '<=' after {name!r}", op.line, op.col)

    def arith_expr(self) -> Expr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Const(int(tok.text))
        ident = self.expect("ident", "an expression")
        nxt = self.peek()
        if nxt.kind == "(":
            self.advance()
            args: list[Expr] = []
            if self.peek().kind != ")":
                args.append(self.arith_expr())
                while self.peek().kind == ",":
                    self.advance()
                    args.append(self.arith_expr())
            self.expect(")", "')'")
            if ident.text in PRIM_OPS:
                if len(args) != 2:
                    self.report(f"{ident.text} expects 2 arguments, got {len(args)}", ident)
                return PrimOp(ident.text, tuple(args))
            self.deferred_calls.append((ident.text, len(args), ident.line, ident.col))
            return Call(ident.text, tuple(args))
        if nxt.kind in ("+", "-"):
            self.advance()
            lit = self.expect("number", "the literal 1")
            if lit.text != "1":
                raise ParseError(
                    f"only {ident.text}+1 and {ident.text}-1 are allowed", lit.line, lit.col
                )
            self.check_param(ident.text, ident)
            return Succ(ident.text) if nxt.kind == "+" else Pred(ident.text)
        self.check_param(ident.text, ident)
        return Var(ident.text)

    def check_param(self, name: str, tok: _Token) -> None:
        if name not in self.params:
            self.report(f"unknown parameter {name!r}", tok)


def parse_program(text: str) -> Program:
    """Parse and validate program text; call sites are labeled in document order.

    Raises ParseError on lexical/syntax errors and ValidationError (with all
    collected diagnostics) on semantic ones.
    """
    return _Parser(text).program()


# --- call sites and guard contexts -------------------------------------------

@dataclass(frozen=True)
class GuardContext:
    """The signed branch conditions on the path from a body's root to a call."""

    facts: frozenset[tuple[BoolExpr, bool]] = frozenset()

    def assuming(self, cond: BoolExpr, holds: bool) -> "GuardContext":
        return GuardContext(self.facts | {(cond, holds)})


@dataclass(frozen=True)
class CallSite:
    id: CallSiteId
    caller: FunSig
    callee: FunSig
    args: tuple[Expr, ...]
    guard: GuardContext


def enumerate_call_sites(program: Program) -> list[CallSite]:
    """All call occurrences with their guard contexts, ordered by label."""
    table = {d.sig.name: d.sig for d in program.defs}
    sites: list[CallSite] = []

    def walk_expr(e: Expr, caller: FunSig, ctx: GuardContext) -> None:
        match e:
            case Call(fun, args, label):
                sites.append(CallSite(label, caller, table[fun], args, ctx))
                for a in args:
                    walk_expr(a, caller, ctx)
            case PrimOp(_, args):
                for a in args:
                    walk_expr(a, caller, ctx)
            case _:
                pass

    def walk_cond(c: CondExpr, caller: FunSig, ctx: GuardContext) -> None:
        match c:
            case Leaf(e):
                walk_expr(e, caller, ctx)
            case If(b, t, o):
                walk_cond(t, caller, ctx.assuming(b, True))
                walk_cond(o, caller, ctx.assuming(b, False))

    for d in program.defs:
        walk_cond(d.body, d.sig, GuardContext())
    assert [s.id for s in sites] == list(range(len(sites)))
    return sites


def implies_positive(ctx: GuardContext, param: str) -> bool:
    """Whether the guard facts force param > 0.

    Closed rule set, deliberately without transitive reasoning: a failed x=0
    test, a passed x=1 or x=c (c >= 1) test, or a passed y<x test.
    """
    for cond, holds in ctx.facts:
        match cond, holds:
            case (EqZero(p), False) if p == param:
                return True
            case (EqOne(p), True) if p == param:
                return True
            case (EqConst(p, c), True) if p == param and c >= 1:
                return True
            case (Lt(_, r), True) if r == param:
                return True
    return False
