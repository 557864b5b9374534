import dataclasses

import pytest
from hypothesis import given, settings, strategies as st

from fppverify.abelian import FinAbGroup
from fppverify.picard import DivisorClass, act, divisor
from fppverify.registry import lookup, registry
from fppverify.vanishing import (AxiomSet, Exclusion, OrbitNotClosed, OutOfScope, PairCase, Proof, ProofTag,
                                 bicanonical_verdict, format_class, orbit_sum_rule, pairing_rule, replay,
                                 run_vanishing, separation_obstruction)

ROWS = registry()
ROW7 = lookup("T1.7")
T2, T7 = ROW7.named("t2"), ROW7.named("t7")


def cls(k2, k7, deg=1):
    return DivisorClass(deg, T2 * k2 + T7 * k7)


def times2(d):
    # the generator acting by x2 on the 7-torsion
    return next(g for g in d.subgroup_generators if act(g, cls(0, 1)) == cls(0, 2))


def test_orbit_sum_on_C7_row():
    d = lookup("T1.5")
    sigma = d.aut_generators[0]
    p = orbit_sum_rule(DivisorClass(1, d.named("t7")), sigma, AxiomSet(d, d.automorphisms()))
    assert p.tag is ProofTag.ORBIT_SUM and p.witness == DivisorClass(3, d.h1.zero)


def test_orbit_sum_on_row7():
    ax = AxiomSet(ROW7, ROW7.automorphisms())
    sigma = times2(ROW7)
    assert orbit_sum_rule(cls(0, 0), sigma, ax).witness == cls(0, 0, 3)
    assert orbit_sum_rule(cls(1, 1), sigma, ax) is None


def test_pairing_examples():
    ax = AxiomSet(ROW7, ROW7.automorphisms())
    e = pairing_rule(cls(1, 1), cls(1, 6), ax)
    assert isinstance(e, Exclusion) and e.source == "K2017"
    t = ROW7.named("t7")
    e = pairing_rule(DivisorClass(1, t), DivisorClass(2, -t), ax)
    assert isinstance(e, Exclusion) and e.source == "PG_ZERO"
    p = pairing_rule(cls(0, 0), cls(0, 0), ax)
    assert isinstance(p, Proof) and p.tag is ProofTag.PAIRING


def test_row7_report():
    rep = run_vanishing(ROW7)
    assert set(rep.proved) == {cls(0, k) for k in range(7)} | {cls(1, 0)}
    assert {frozenset(o) for o in rep.orbits} == {frozenset(cls(1, k) for k in (1, 2, 4)),
                                                  frozenset(cls(1, k) for k in (3, 5, 6))}
    assert rep.max_simultaneously_effective == 3
    assert any("3t7" in n for n in rep.notes)


def test_row7_exclusions_are_complete_bipartite():
    rep = run_vanishing(ROW7)
    a, b = rep.orbits
    direct = {frozenset((e.a, e.b)) for e in rep.exclusions}
    assert not any(frozenset((x, y)) in direct for o in (a, b) for x in o for y in o if x != y)
    # x effective forces its whole orbit effective, so x excludes y once some image of x does
    auts = ROW7.automorphisms()
    assert all(any(frozenset((act(g, x), y)) in direct for g in auts) for x in a for y in b)


@pytest.mark.parametrize("d", ROWS, ids=lambda d: d.id)
def test_replay_and_orbit_closure(d):
    rep = run_vanishing(d)
    assert replay(rep, d) == []
    for g in d.automorphisms():
        assert {act(g, D) for D in rep.proved} == set(rep.proved)
        assert {act(g, D) for D in rep.undetermined} == set(rep.undetermined)
    assert len(rep.proved) + len(rep.undetermined) == d.h1.order


@pytest.mark.parametrize("ident", ["T1.1", "T1.2", "T1.3"])
def test_branch_independence(ident):
    d = lookup(ident)
    reports = [run_vanishing(b) for b in d.offset_branches()]
    assert len({frozenset(r.proved) for r in reports}) == 1
    assert len({frozenset(r.undetermined) for r in reports}) == 1
    assert run_vanishing(d).branch_independent


@settings(max_examples=25)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 6)), max_size=3))
def test_adding_axioms_never_shrinks_proofs(extra):
    base = set(run_vanishing(ROW7).proved)
    more = run_vanishing(ROW7, extra_axioms=[cls(a, b, 2) for a, b in extra])
    assert base <= set(more.proved)


def test_assumed_effective_propagates_through_pairing():
    rep = run_vanishing(ROW7, assumed_effective=[cls(1, 1)])
    assert all(D in rep.proved for D in (cls(1, 3), cls(1, 5), cls(1, 6)))


def test_separation_certificates():
    orbit = [cls(1, 1), cls(1, 2), cls(1, 4)]
    sigma = times2(ROW7)
    assert separation_obstruction(orbit, PairCase.DISTINCT, sigma).delta == T2
    near = separation_obstruction(orbit, "INFINITELY_NEAR_1", sigma)
    assert near.delta in (cls(1, 5, 0).torsion, (-cls(1, 5, 0)).torsion) and near.contradiction
    with pytest.raises(OrbitNotClosed):
        separation_obstruction([cls(1, 1), cls(1, 4), cls(1, 2)], PairCase.DISTINCT, sigma)


def test_torsion_free_surface_is_inconclusive():
    D = divisor(FinAbGroup(()), 1)
    c = separation_obstruction([D, D, D], PairCase.DISTINCT)
    assert c.delta.is_zero() and c.verdict == "INCONCLUSIVE"


def test_verdicts():
    for d in ROWS:
        v = bicanonical_verdict(d)
        if d.table == 1:
            assert v.verdict.value == "EMBEDDING"
        else:
            assert v.verdict.value == "EMBEDDING_OUTSIDE_FIXED_POINTS" and v.exceptional_points in (2, 3)
    with pytest.raises(OutOfScope):
        bicanonical_verdict(dataclasses.replace(ROW7, aut_type="G21"))


def test_explain_and_json():
    rep = run_vanishing(ROW7)
    assert "PG_ZERO" in rep.explain(cls(0, 3))
    assert "undetermined" in rep.explain(cls(1, 1))
    j = rep.to_json()
    assert len(j["proved_noneffective"]) == 8 and len(j["undetermined"]) == 6
    assert format_class(cls(1, 5), rep.names) == "L0 + t2 + 5t7"
