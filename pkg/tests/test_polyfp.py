import pytest
from hypothesis import given, strategies as st
from sympy import GF, Poly as SPoly, symbols

from fppverify.polyfp import (cyclic_action_fixed_count, degree, divmod_poly, factor_cyclotomic_mod_p,
                              gcd, is_irreducible_trial, mul, product, to_str, trim, x_n_minus_1)

x = symbols("x")
PRIMES = [2, 3, 5, 7, 11, 13]


def sympy_factor_degrees(n, p):
    _, facs = SPoly(x ** n - 1, x, modulus=p).factor_list()
    return sorted(f.degree() for f, e in facs for _ in range(e))


def as_sympy(f, p):
    return SPoly(list(reversed(f)), x, modulus=p)


@given(st.integers(1, 60), st.sampled_from(PRIMES))
def test_factorisation_matches_sympy(n, p):
    fs = factor_cyclotomic_mod_p(n, p)
    assert product(fs, p) == x_n_minus_1(n, p)
    assert sorted(degree(f) for f in fs) == sympy_factor_degrees(n, p)
    for f in fs:
        assert f[-1] == 1
        assert as_sympy(f, p).is_irreducible


@given(st.integers(1, 12), st.sampled_from([2, 3, 5]))
def test_irreducibility_by_trial_division(n, p):
    for f in factor_cyclotomic_mod_p(n, p):
        assert is_irreducible_trial(f, p)


polys = st.lists(st.integers(0, 6), min_size=1, max_size=6)


@given(polys, polys)
def test_division_identity(a, b):
    p = 7
    a, b = trim(a, p), trim(b, p)
    if not b:
        return
    q, r = divmod_poly(a, b, p)
    lhs = mul(q, b, p) if q and b else ()
    total = [((lhs[i] if i < len(lhs) else 0) + (r[i] if i < len(r) else 0)) % p
             for i in range(max(len(lhs), len(r), len(a)))]
    assert trim(total, p) == a
    assert degree(r) < degree(b) or not r


@given(polys, polys)
def test_gcd_divides_both(a, b):
    p = 7
    a, b = trim(a, p), trim(b, p)
    if not a or not b:
        return
    g = gcd(a, b, p)
    assert not divmod_poly(a, g, p)[1] and not divmod_poly(b, g, p)[1]
    assert as_sympy(g, p).monic() == as_sympy(a, p).gcd(as_sympy(b, p)).monic()


def test_x7_minus_1_over_F2():
    fs = factor_cyclotomic_mod_p(7, 2)
    assert [to_str(f) for f in fs] == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]


def test_inseparable_case_repeats_factors():
    # x^6 - 1 = (x^3 - 1)^2 over F2
    fs = factor_cyclotomic_mod_p(6, 2)
    assert fs == sorted(factor_cyclotomic_mod_p(3, 2) * 2, key=lambda f: (len(f), tuple(reversed(f))))


def test_fixed_dimensions_of_C7_on_2_torsion():
    assert cyclic_action_fixed_count(3, 2, 7).fixed_dimensions == (0,)
    assert cyclic_action_fixed_count(4, 2, 7).fixed_dimensions == (1,)
    assert cyclic_action_fixed_count(6, 2, 7).fixed_dimensions == (0, 3)
    assert cyclic_action_fixed_count(6, 2, 7, max_fixed_size=3).fixed_dimensions == (0,)


def test_bad_inputs():
    with pytest.raises(ValueError):
        factor_cyclotomic_mod_p(7, 4)
    with pytest.raises(ValueError):
        cyclic_action_fixed_count(3, 7, 7)
