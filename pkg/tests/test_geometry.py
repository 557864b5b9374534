import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, Rational

from fppverify.abelian import FinAbGroup
from fppverify.geometry import (ELLIPTIC_TYPES, check_pullback_coefficients, continued_fraction,
                                elliptic_pi1_datum, evaluate_continued_fraction, genus_certificate,
                                hirzebruch_jung, preset_quotient, pullback_proper_transform,
                                quotient_invariants, reider_filter, solve_rational)
from fppverify.picard import divisor

coprime = st.integers(2, 200).flatmap(
    lambda n: st.sampled_from([q for q in range(1, n) if math.gcd(n, q) == 1]).map(lambda q: (n, q)))


@given(coprime)
def test_continued_fraction_roundtrip(nq):
    n, q = nq
    bs = continued_fraction(n, q)
    assert all(b >= 2 for b in bs)
    assert evaluate_continued_fraction(bs) == Fr(n, q)


@given(coprime)
def test_resolution_graph_properties(nq):
    g = hirzebruch_jung(*nq)
    assert g.is_negative_definite()
    M = g.intersection_matrix
    # adjunction on each rational curve: (K + E_i).E_i = -2
    for i, b in enumerate(g.hj):
        assert sum(g.discrepancies[j] * M[j][i] for j in range(g.length)) + M[i][i] == -2
    assert all(-1 < a <= 0 for a in g.discrepancies)
    assert g.is_du_val() == all(a == 0 for a in g.discrepancies)


@given(coprime)
def test_discrepancies_match_sympy(nq):
    g = hirzebruch_jung(*nq)
    if g.length > 8:
        return
    sol = Matrix(g.intersection_matrix).LUsolve(Matrix([b - 2 for b in g.hj]))
    assert [Rational(a.numerator, a.denominator) for a in g.discrepancies] == list(sol)


def test_known_chains():
    assert hirzebruch_jung(3, 2).hj == (2, 2) and hirzebruch_jung(3, 2).discrepancies == (0, 0)
    assert hirzebruch_jung(2, 1).hj == (2,)
    g = hirzebruch_jung(7, 5)
    assert g.hj == (2, 2, 3) and g.discrepancies == (Fr(-1, 7), Fr(-2, 7), Fr(-3, 7))
    assert g.k_squared_correction() == Fr(-3, 7)
    with pytest.raises(ValueError):
        hirzebruch_jung(6, 3)


def test_reider_cases():
    sep = reider_filter(9, 1, 3, "SEPARATION")
    assert [(c.case_id, c.witness_m, c.D2, c.DL) for c in sep] == [("SEP_D", 1, 1, 3)]
    assert reider_filter(9, 1, 3, "bp") == []
    assert reider_filter(16, 1, 4, "sep") == []
    with pytest.raises(ValueError):
        reider_filter(10, 1, 3, "sep")


def test_genus_certificates():
    H = FinAbGroup((7,))
    c = genus_certificate(divisor(H, 1))
    assert (c.p_a, c.genus_lower_bound, c.verdict) == (3, 3, "SMOOTH")
    c = genus_certificate(divisor(H, 1), no_geodesics=False)
    assert (c.genus_lower_bound, c.verdict) == (2, "INCONCLUSIVE")
    c = genus_certificate(divisor(H, 2))
    assert (c.p_a, c.genus_lower_bound, c.verdict) == (6, 4, "INCONCLUSIVE")


def test_pullback_examples():
    A2 = hirzebruch_jung(3, 2)
    r = pullback_proper_transform([A2, A2], [(1, 0), (1, 0)], Fr(1, 3))
    assert r.coefficients == ((Fr(2, 3), Fr(1, 3)),) * 2 and r.proper_square == -1
    assert pullback_proper_transform([], [], 1).proper_square == 1
    r = pullback_proper_transform([A2], [(1, 1)], Fr(2, 3))
    assert r.coefficients == ((1, 1),) and r.corrections == (2,) and r.proper_square == Fr(-4, 3)


def test_half_coefficients_are_refuted():
    A2 = hirzebruch_jung(3, 2)
    bad = check_pullback_coefficients(A2, [Fr(1, 2), 0])
    assert bad.intersections == (1, Fr(-1, 2)) and not bad.consistent
    assert check_pullback_coefficients(A2, [Fr(2, 3), Fr(1, 3)]).intersections == (1, 0)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_rational(b):
    M = [[-2, 1, 0], [1, -2, 1], [0, 1, -3]]
    x = solve_rational(M, b)
    assert [sum(M[i][j] * x[j] for j in range(3)) for i in range(3)] == b


def test_quotients():
    want = {"C3": (3, 9, 1), "C3xC3": (1, 11, 1), "C7": (0, 12, 1), "G21": (0, 12, 1)}
    for name, (k2, e, chi) in want.items():
        q = preset_quotient(name)
        assert (q.K2_resolution, q.euler_resolution, q.chi) == (k2, e, chi)
    with pytest.raises(ValueError):
        quotient_invariants(3, [(3, 2, 2)], fixed_points=2)
    with pytest.raises(KeyError):
        preset_quotient("C5")


def test_elliptic_fundamental_groups():
    assert [elliptic_pi1_datum(a, b) for a, b in ELLIPTIC_TYPES] == [1, 2, 3]
