import random

from hypothesis import given, strategies as st

from fppverify.abelian import coinvariants, cyclic_product
from fppverify.sampling import (_mul, norm_cases, primary_orders, random_group, random_unimodular,
                                trace_cases)


@given(st.integers(0, 10 ** 6))
def test_random_unimodular_inverse(seed):
    rng = random.Random(seed)
    H = random_group(rng, 300)
    o = primary_orders(H)
    A, B = random_unimodular(o, rng)
    ident = [[int(i == j) for j in range(len(o))] for i in range(len(o))]
    assert _mul(A, B, o) == ident and _mul(B, A, o) == ident
    assert cyclic_product(o).endo(A).is_automorphism()


def test_trace_cases_are_coprime_and_periodic():
    import math

    for c in trace_cases(60, seed=3):
        assert math.gcd(c.m, c.group.exponent) == 1
        assert (c.endo ** c.m).is_identity()


def test_norm_cases_satisfy_preconditions():
    total = 0
    for F, cases in norm_cases(seed=1, max_order=60, draws=5):
        assert F.order % 9
        for c in cases:
            assert (c.sigma ** 3).is_identity() and not c.sigma.is_identity()
            assert coinvariants(F, c.sigma).group.invariant_factors in ((), (3,))
            total += 1
    assert total > 0


def test_sampling_is_seeded():
    a = [(c.group, c.endo, c.m) for c in trace_cases(20, seed=7)]
    b = [(c.group, c.endo, c.m) for c in trace_cases(20, seed=7)]
    assert a == b
