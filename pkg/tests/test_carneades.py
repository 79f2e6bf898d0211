from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_graph
from oracles import fixpoint_evaluate
from inventio import ArgumentGraph, Audience, ProofStandard, Status, evaluate, is_applicable, proof_subgraph
from inventio.errors import IncoherentAudience, InvalidGraph, NotDecided, UnknownStatement, UnresolvedPremise
from inventio.model import Argument, Direction, PremiseKind

A, R, U = Status.ACCEPTED, Status.REJECTED, Status.UNDECIDED
O, ASM, EXC = PremiseKind.ORDINARY, PremiseKind.ASSUMPTION, PremiseKind.EXCEPTION


def test_cisg_outcome(cisg):
    graph, audience = cisg
    lab = evaluate(graph, audience)
    assert {s: lab[s] for s in ("s1", "s2", "s3", "s4", "c")} == {"s1": A, "s2": A, "s3": A, "s4": A, "c": R}
    assert lab["not_c"] is A
    assert lab.argument_applicable == {"a1": True, "a2": True, "a3": True, "a4": True}


def test_cisg_matches_fixpoint_oracle(cisg):
    graph, audience = cisg
    expected, app = fixpoint_evaluate(graph, audience.accepted, audience.rejected)
    lab = evaluate(graph, audience)
    assert {k: v.value for k, v in lab.statement_status.items()} == expected
    assert dict(lab.argument_applicable) == app


def test_no_arguments_means_undecided():
    g = ArgumentGraph()
    g.add_statement("x", id="x")
    g.add_statement("y", id="y")
    lab = evaluate(g)
    assert set(lab.statement_status.values()) == {U}


def test_single_pro_argument_is_enough():
    g = ArgumentGraph()
    g.add_statement("s", id="s")
    g.add_argument("s", "pro", weight=0.6)
    assert evaluate(g)["s"] is A
    assert evaluate(g, standard="scintilla")["s"] is A


def test_ties_stay_undecided():
    g = ArgumentGraph()
    g.add_statement("s", id="s")
    g.add_argument("s", "pro", weight=0.5)
    g.add_argument("s", "con", weight=0.5)
    assert evaluate(g)["s"] is U


def test_scintilla_with_support_on_both_sides():
    g = ArgumentGraph()
    g.add_statement("s", id="s")
    g.add_argument("s", "pro", weight=0.9)
    g.add_argument("s", "con", weight=0.1)
    assert evaluate(g)["s"] is A
    assert evaluate(g, standard=ProofStandard.SCINTILLA)["s"] is U


def test_applicability_rules(cisg):
    graph, audience = cisg
    assert is_applicable(graph, {"s2": A}, "a3")
    g = ArgumentGraph()
    for sid in ("c", "e", "asm"):
        g.add_statement(sid, id=sid)
    g.add_argument("c", "pro", [("e", EXC)], id="blocked")
    g.add_argument("c", "pro", [], id="bare")
    g.add_argument("c", "pro", [("asm", ASM)], id="assumed")
    assert not is_applicable(g, {"e": A}, "blocked")
    assert is_applicable(g, {"e": U}, "blocked")
    assert is_applicable(g, {}, "bare")
    assert is_applicable(g, {"asm": U}, "assumed")
    assert not is_applicable(g, {"asm": R}, "assumed")
    with pytest.raises(UnresolvedPremise):
        is_applicable(g, {}, "assumed")


def test_complement_pooling():
    g = ArgumentGraph()
    g.add_statement("p", id="p")
    g.add_statement("not p", id="not_p")
    g.link_complement("p", "not_p")
    g.add_argument("p", "pro", weight=0.3)
    g.add_argument("not_p", "pro", weight=0.7)
    lab = evaluate(g)
    assert (lab["p"], lab["not_p"]) == (R, A)


def test_audience_wins_and_flips_complement(cisg):
    graph, _ = cisg
    lab = evaluate(graph, Audience(frozenset({"c", "s1"})))
    assert lab["c"] is A and lab["not_c"] is R
    lab = evaluate(graph, Audience(rejected=frozenset({"not_c"})))
    assert lab["c"] is A


def test_incoherent_audiences(cisg):
    graph, _ = cisg
    with pytest.raises(IncoherentAudience):
        Audience(frozenset({"c"}), frozenset({"c"}))
    with pytest.raises(IncoherentAudience):
        evaluate(graph, Audience(frozenset({"c", "not_c"})))
    with pytest.raises(UnknownStatement):
        evaluate(graph, Audience(frozenset({"ghost"})))


def test_invalid_graph_is_refused():
    bad = ArgumentGraph({}, {"a": Argument("a", "ghost", Direction.PRO)})
    with pytest.raises(InvalidGraph):
        evaluate(bad)


def test_proof_subgraph_cisg(cisg):
    graph, audience = cisg
    lab = evaluate(graph, audience)
    sub = proof_subgraph(graph, lab, "c")
    assert set(sub.statements) | set(sub.arguments) == {"s2", "a3", "s4", "a2", "c"}
    assert evaluate(sub, audience.restrict(sub.statements))["c"] is R


def test_proof_subgraph_of_audience_statement(cisg):
    graph, audience = cisg
    lab = evaluate(graph, audience)
    sub = proof_subgraph(graph, lab, "s1")
    assert set(sub.statements) == {"s1"} and not sub.arguments


def test_proof_subgraph_needs_decided_statement():
    g = ArgumentGraph()
    g.add_statement("x", id="x")
    with pytest.raises(NotDecided):
        proof_subgraph(g, evaluate(g), "x")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(list(ProofStandard)))
def test_evaluation_properties(seed, standard):
    rng = random.Random(seed)
    graph = random_graph(rng)
    ids = sorted(graph.statements)
    picked = rng.sample(ids, rng.randint(0, 4))
    accepted, rejected = set(), set()
    for sid in picked:
        comp = graph.complement(sid)
        target = accepted if rng.random() < 0.6 else rejected
        if sid in accepted | rejected or comp in target:
            continue
        target.add(sid)
    audience = Audience(frozenset(accepted), frozenset(rejected - accepted))

    lab = evaluate(graph, audience, standard)
    # determinism
    assert evaluate(graph, audience, standard) == lab
    # agreement with exhaustive rule application (also shows one sweep reaches the fixpoint)
    expected, app = fixpoint_evaluate(graph, audience.accepted, audience.rejected, standard.value)
    assert {k: v.value for k, v in lab.statement_status.items()} == expected
    assert dict(lab.argument_applicable) == app
    # totality and complement coherence
    assert set(lab.statement_status) == set(graph.statements)
    for sid, s in graph.statements.items():
        if s.complement_of:
            pair = {lab[sid], lab[s.complement_of]}
            assert pair in ({A, R}, {U})
    # audience respected
    assert all(lab[s] is A for s in audience.accepted)
    assert all(lab[s] is R for s in audience.rejected)
    # scintilla: lone applicable support suffices
    if standard is ProofStandard.SCINTILLA:
        for sid in graph.statements:
            if sid in audience.accepted | audience.rejected:
                continue
            comp = graph.complement(sid)
            if comp in audience.accepted | audience.rejected:
                continue
            live = [a for a in graph.arguments.values() if lab.argument_applicable[a.id]]
            pro = [a for a in live if (a.conclusion, a.direction.value) in {(sid, "pro"), (comp, "con")}]
            con = [a for a in live if (a.conclusion, a.direction.value) in {(sid, "con"), (comp, "pro")}]
            if pro and not con:
                assert lab[sid] is A
    # proofs re-evaluate to the same status
    for sid in ids:
        if lab[sid] is U:
            continue
        sub = proof_subgraph(graph, lab, sid)
        again = evaluate(sub, audience.restrict(sub.statements), standard)
        assert again[sid] is lab[sid]
