import random

import pytest

from helpers import random_functional_graph_set
from sct import (
    GuardContext,
    ParseError,
    ValidationError,
    enumerate_call_sites,
    implies_positive,
    parse_program,
    synthesize,
)
from sct.syntax import (
    And,
    Call,
    Const,
    EqConst,
    EqOne,
    EqZero,
    Le,
    Lt,
    Not,
    Or,
    Pred,
    Var,
    format_program,
)

CORPUS = [
    "f(x, y) = if x<y && !(x=0) then f(x-1, y) else plus(x, y)",
    "g(a) = if a=5 || a=1 then g(a-1) else max(a, 1)",
    "h(u, v) = if u<=v then h(u+1, v-1) else times(u, min(u, v))\nk(w) = h(w, 3)",
    "loop(n) = loop(n+1)",
    "f(x) = if (x=0 || x=1) && !(x=2) then 7 else f(x-1)",
]


class TestParse:
    def test_ackermann_shape(self, ackermann):
        assert len(ackermann.defs) == 1
        sites = enumerate_call_sites(ackermann)
        assert [s.id for s in sites] == [0, 1, 2]
        assert sites[0].args == (Pred("x"), Const(1))
        outer = sites[1]
        assert outer.args[0] == Pred("x")
        assert outer.args[1] == Call("A", (Var("x"), Pred("y")), 2)
        assert sites[2].args == (Var("x"), Pred("y"))

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_program("")

    def test_comment_only_input(self):
        with pytest.raises(ParseError):
            parse_program("# nothing here\n")

    def test_undefined_function(self):
        with pytest.raises(ValidationError) as exc:
            parse_program("f(x) = g(x, x)")
        (diag,) = exc.value.diagnostics
        assert "undefined" in diag.message and diag.line == 1

    def test_arity_mismatch(self):
        with pytest.raises(ValidationError, match="expects 1 argument"):
            parse_program("f(x) = f(x, x)")

    def test_duplicate_function(self):
        with pytest.raises(ValidationError, match="duplicate function"):
            parse_program("f(x) = x\nf(y) = y")

    def test_duplicate_parameter(self):
        with pytest.raises(ValidationError, match="duplicate parameter"):
            parse_program("f(x, x) = x")

    def test_unknown_parameter(self):
        with pytest.raises(ValidationError, match="unknown parameter"):
            parse_program("f(x) = y")

    def test_primop_arity(self):
        with pytest.raises(ValidationError, match="plus expects 2"):
            parse_program("f(x) = plus(x)")

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse_program("f(x) = if x=0 then x")
        assert exc.value.line == 1

    def test_suffix_literal_must_be_one(self):
        with pytest.raises(ParseError, match="[+]1"):
            parse_program("f(x) = x+2")

    def test_connective_forms(self):
        p = parse_program(CORPUS[4])
        cond = p.defs[0].body.cond
        assert cond == And(Or(EqZero("x"), EqOne("x")), Not(EqConst("x", 2)))

    def test_semicolon_and_juxtaposition(self):
        a = parse_program("f(x) = x; g(y) = f(y)")
        b = parse_program("f(x) = x\ng(y) = f(y)")
        c = parse_program("f(x) = x g(y) = f(y)")
        assert a == b == c


class TestRoundTrip:
    @pytest.mark.parametrize("text", CORPUS)
    def test_corpus_fixpoint(self, text):
        once = parse_program(text)
        assert parse_program(format_program(once)) == once

    def test_ackermann_fixpoint(self, ackermann):
        assert parse_program(format_program(ackermann)) == ackermann

    def test_synthesized_fixpoint(self):
        rng = random.Random(11)
        for _ in range(30):
            program = synthesize(random_functional_graph_set(rng))
            assert parse_program(format_program(program)) == program

    def test_reparse_stability(self):
        text = CORPUS[2]
        assert parse_program(text) == parse_program(text)


class TestGuards:
    def test_ackermann_contexts(self, ackermann):
        sites = enumerate_call_sites(ackermann)
        x0, y0 = EqZero("x"), EqZero("y")
        assert sites[0].guard.facts == frozenset({(x0, False), (y0, True)})
        assert sites[1].guard.facts == frozenset({(x0, False), (y0, False)})
        assert sites[2].guard.facts == frozenset({(x0, False), (y0, False)})

    def test_comparison_guard(self):
        p = parse_program("f(x, y) = if x<y then f(y, y) else x")
        (site,) = enumerate_call_sites(p)
        assert site.guard.facts == frozenset({(Lt("x", "y"), True)})

    def test_facts_are_exactly_the_branch_conditions(self):
        p = parse_program(
            "f(x, y) = if x<=y then if !(x=0) then f(x-1, y) else x else f(x, y-1)"
        )
        first, second = enumerate_call_sites(p)
        assert first.guard.facts == frozenset(
            {(Le("x", "y"), True), (Not(EqZero("x")), True)}
        )
        assert second.guard.facts == frozenset({(Le("x", "y"), False)})

    def test_no_calls_no_sites(self):
        assert enumerate_call_sites(parse_program("f(x) = plus(x, 1)")) == []


class TestImpliesPositive:
    def ctx(self, *facts):
        return GuardContext(frozenset(facts))

    def test_failed_zero_test(self):
        assert implies_positive(self.ctx((EqZero("x"), False)), "x")

    def test_empty_context(self):
        assert not implies_positive(self.ctx(), "x")

    def test_strict_upper_neighbor(self):
        assert implies_positive(self.ctx((Lt("y", "x"), True)), "x")

    def test_one_and_constant_tests(self):
        assert implies_positive(self.ctx((EqOne("x"), True)), "x")
        assert implies_positive(self.ctx((EqConst("x", 3), True)), "x")
        assert not implies_positive(self.ctx((EqConst("x", 0), True)), "x")

    def test_no_inference_beyond_the_rules(self):
        assert not implies_positive(self.ctx((EqZero("x"), True)), "x")
        assert not implies_positive(self.ctx((Le("y", "x"), True)), "x")
        assert not implies_positive(self.ctx((Lt("x", "y"), True)), "x")
        assert not implies_positive(self.ctx((EqZero("y"), False)), "x")
        # a negated atom hidden under ! is not decomposed
        assert not implies_positive(self.ctx((Not(EqZero("x")), True)), "x")
