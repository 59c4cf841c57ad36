"""Smoke tests for the python module: a quick pass over every major surface."""

import json

import pytest

import kaw


def test_parse_and_print_round_trip():
    e = kaw.Expr.parse("(a.b)*.a")
    assert str(e) == "(a.b)*.a"
    assert kaw.Expr.parse(str(e)) == e
    with pytest.raises(ValueError):
        kaw.Expr.parse("a+")


def test_membership_and_enumeration():
    e = kaw.Expr.parse("(a.b)*.a")
    assert kaw.member("a", e)
    assert kaw.member("aba", e)
    assert not kaw.member("ab", e)
    assert kaw.enumerate_words(e, 3) == ["a", "aba"]
    assert kaw.nullable(kaw.Expr.parse("a*"))


def test_derivative_automaton_reproduces_the_example():
    a = kaw.antimirov_automaton(kaw.Expr.parse("a.(b.a)*"))
    assert a.num_states == 5
    assert len(a.finals) == 2
    assert len(a.initials) == 1
    assert a.accepts("aba")
    assert not a.accepts("ab")
    round_tripped = kaw.Nfa.from_json(a.to_json())
    assert round_tripped == a


def test_language_equivalence_and_inclusion():
    star = kaw.antimirov_automaton(kaw.Expr.parse("a*"))
    unrolled = kaw.antimirov_automaton(kaw.Expr.parse("1+a.a*"))
    holds, counterexample, side = kaw.language_equiv(star, unrolled)
    assert holds and counterexample is None and side is None

    ab = kaw.antimirov_automaton(kaw.Expr.parse("a.b"))
    ba = kaw.antimirov_automaton(kaw.Expr.parse("b.a"))
    holds, counterexample, side = kaw.language_equiv(ab, ba)
    assert not holds
    assert counterexample == "ab"
    assert side == "left"


def test_solver_denotes_state_languages():
    a = kaw.antimirov_automaton(kaw.Expr.parse("a.(b.a)*"))
    language = kaw.soli(a)
    rebuilt = kaw.antimirov_automaton(language)
    holds, _, _ = kaw.language_equiv(rebuilt, a)
    assert holds


def test_transition_monoid_of_the_running_example():
    a = kaw.antimirov_automaton(kaw.Expr.parse("a.(b.a)*"))
    monoid = kaw.transition_monoid(a)
    assert monoid.size == 6
    witnesses = [el.witness for el in monoid.elements]
    assert "" in witnesses  # the identity
    target = kaw.word_relation(a, "a")
    ta = kaw.transformation_automaton(monoid, target)
    assert ta.accepts("a")
    assert not ta.accepts("")


def test_canonical_model_interpretations():
    e = kaw.Expr.parse("a.(b.a)*")
    cm = kaw.canonical_model(e)
    of_e = kaw.interpret(cm.h, e)
    assert len(cm.ka.value(of_e)) == 1
    of_mixed = kaw.interpret(cm.h, kaw.Expr.parse("a.b*.a"))
    assert len(cm.ka.value(of_mixed)) == 2


def test_countermodel_search_self_validates():
    c = kaw.countermodel_search(kaw.Expr.parse("a.b"), kaw.Expr.parse("b.a"))
    assert c is not None
    assert c.word == "ab"
    assert c.point == (0, 2)
    assert c.in_left
    payload = json.loads(c.to_json())
    assert payload["assignment"]["a"] == [[0, 1]]

    assert kaw.countermodel_search(kaw.Expr.parse("a*"),
                                   kaw.Expr.parse("1+a.a*")) is None


def test_fmp_sandwich_certifies():
    report = kaw.fmp_sandwich(kaw.Expr.parse("a*"), kaw.Expr.parse("1+a.a*"))
    assert report.precondition_holds
    assert report.certified
    assert all(v.holds for v in report.inclusions)

    report = kaw.fmp_sandwich(kaw.Expr.parse("a.b"), kaw.Expr.parse("b.a"))
    assert not report.precondition_holds
    assert not report.certified


def test_lemma_suite_on_the_default_corpus():
    report = kaw.lemma_suite(kaw.default_corpus())
    assert report.failures == 0
    assert report.skipped == 0
    assert len(report.results) > 100


def test_cli_entry_point():
    code, out, err = kaw.run_cli(["equiv", "(a.b)*.a", "(a.b)*.a"])
    assert code == 0
    assert out.strip() == "equivalent"
    code, out, err = kaw.run_cli(["countermodel", "a.b", "b.a"])
    assert code == 1
    assert json.loads(out)["word"] == "ab"
