import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from fppverify.abelian import (FinAbGroup, GroupEndo, abelian_groups_of_order, automorphisms,
                               automorphisms_of_order, coinv_inv_isomorphism_check, coinvariants,
                               cyclic_product, factorize, invariants, little_lemma_check, orbit, trace_endo)
from fppverify.sampling import primary_orders, random_unimodular

orders = st.lists(st.integers(1, 12), min_size=0, max_size=3).filter(lambda o: math.prod(o) <= 400)


@st.composite
def group_with_automorphism(draw):
    o = draw(orders)
    iso = cyclic_product(o)
    H = iso.group
    prim = primary_orders(H)
    A, _ = random_unimodular(prim, random.Random(draw(st.integers(0, 10 ** 6))))
    return H, cyclic_product(prim).endo(A)


def brute_image(f, H):
    return {f(x) for x in H.elements()}


def brute_kernel(f, H):
    return {x for x in H.elements() if f(x).is_zero()}


@given(orders)
def test_cyclic_product_is_isomorphism(o):
    iso = cyclic_product(o)
    assert iso.group.order == math.prod(o)
    seen = set()
    for c in itertools.product(*[range(n) for n in o]):
        x = iso.element(c)
        assert iso.coords(x) == tuple(ci % n for ci, n in zip(c, o))
        seen.add(x)
    assert len(seen) == iso.group.order


@given(group_with_automorphism())
def test_coinvariants_and_invariants_by_enumeration(Hg):
    H, g = Hg
    one = GroupEndo.identity(H)
    im = brute_image(g - one, H)
    assert coinvariants(H, g).order * len(im) == H.order
    assert set(invariants(H, g).elements()) == brute_kernel(g - one, H)


@given(group_with_automorphism())
def test_trace_against_sum_of_powers(Hg):
    H, g = Hg
    m = g.order()
    tr = trace_endo(H, g, m)
    for x in list(H.elements())[:50]:
        acc, y = H.zero, x
        for _ in range(m):
            acc, y = acc + y, g(y)
        assert tr(x) == acc


@given(group_with_automorphism())
def test_orbit_length_divides_order(Hg):
    H, g = Hg
    k = g.order()
    for x in list(H.elements())[:30]:
        assert k % len(orbit(x, g)) == 0


def test_endo_well_definedness_is_enforced():
    H = FinAbGroup((2, 4))
    with pytest.raises(ValueError):
        GroupEndo(H, ((0, 0), (1, 0)))     # a generator of order 2 sent to one of order 4
    GroupEndo(H, ((0, 0), (2, 0)))


def test_group_counts():
    assert [len(abelian_groups_of_order(n)) for n in (1, 8, 16, 72, 500)] == [1, 3, 5, 6, 6]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]


def test_automorphism_counts():
    # |Aut| of C8, C2 x C2, C2 x C4, C3 x C3
    counts = [len(automorphisms(FinAbGroup(d))) for d in ((8,), (2, 2), (2, 4), (3, 3))]
    assert counts == [4, 6, 8, 48]
    assert len(automorphisms_of_order(FinAbGroup((7,)), 3)) == 2


def test_trace_iso_needs_coprime_order():
    H = FinAbGroup((3,))
    g = GroupEndo.identity(H)
    assert coinv_inv_isomorphism_check(H, g, 3).status == "PRECONDITION_VIOLATED"
    assert coinv_inv_isomorphism_check(H, g, 2).passed


def test_norm_fails_on_C9():
    F = FinAbGroup((9,))
    v = little_lemma_check(F, GroupEndo.scalar(F, 4))
    assert not v.preconditions_ok and not v.holds
    assert v.counterexample is not None


def test_norm_holds_on_C7_with_cube_root():
    F = FinAbGroup((7,))
    v = little_lemma_check(F, GroupEndo.scalar(F, 2))
    assert v.preconditions_ok and v.holds


def test_norm_generator_mode_above_bound():
    iso = cyclic_product([7, 7, 13])
    sigma = iso.diagonal_endo([2, 4, 3])
    v = little_lemma_check(iso.group, sigma, bound=100)
    assert v.mode == "generators" and v.holds
