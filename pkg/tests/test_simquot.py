import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from fppverify.simquot import (NotSimplicial, SimplicialAction, SimplicialComplex, barycentric_subdivision,
                               coinvariant_surjection_check, exact_sequence_II_check, grid_reflection,
                               grid_torus, h1, invariant_subcomplex, is_cycle, polygon, quotient_complex,
                               rotation, rp2_6, tetrahedron_boundary, torus_7)

COMPLEXES = {"torus_7": torus_7, "rp2_6": rp2_6, "sphere": tetrahedron_boundary,
             "hexagon": lambda: polygon(6), "grid_torus": lambda: grid_torus(4)}
EXPECTED = {"torus_7": "Z x Z", "rp2_6": "C2", "sphere": "0", "hexagon": "Z", "grid_torus": "Z x Z"}


def dense_h1(K):
    """H1 from dense boundary matrices and sympy's Smith form."""
    E, T = K.edges, K.triangles
    V = K.n_vertices
    d1 = [[0] * len(E) for _ in range(V)]
    for j, (a, b) in enumerate(E):
        d1[a][j] -= 1
        d1[b][j] += 1
    eidx = {e: i for i, e in enumerate(E)}
    d2 = [[0] * len(T) for _ in range(len(E))]
    for j, (a, b, c) in enumerate(T):
        d2[eidx[(b, c)]][j] += 1
        d2[eidx[(a, c)]][j] -= 1
        d2[eidx[(a, b)]][j] += 1
    r1 = Matrix(d1).rank() if E else 0
    inv = [int(x) for x in invariant_factors(Matrix(d2), domain=ZZ)] if T else []
    r2 = sum(1 for x in inv if x)
    torsion = [x for x in inv if x > 1]
    return sorted(torsion), len(E) - r1 - r2


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_h1_against_dense_oracle(name):
    K = COMPLEXES[name]()
    H = h1(K)
    assert H.describe() == EXPECTED[name]
    torsion, free = dense_h1(K)
    assert list(H.torsion.invariant_factors) == torsion and H.free_rank == free
    for z in H.generators():
        assert is_cycle(z)


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_h1_survives_subdivision(name):
    K = COMPLEXES[name]()
    sd, _ = barycentric_subdivision(K)
    assert h1(sd).describe() == h1(K).describe()
    assert sd.euler_characteristic() == K.euler_characteristic()


def test_quotients():
    C = polygon(6)
    q = quotient_complex(C, SimplicialAction(C, (rotation(6, 2),)))
    # a 2-vertex circle is not simplicial, so the quotient is taken after subdividing
    assert h1(q.quotient).describe() == "Z" and q.quotient.euler_characteristic() == 0
    assert q.subdivisions == 1
    T = grid_torus(4)
    q = quotient_complex(T, SimplicialAction(T, (grid_reflection(4),)))
    assert h1(q.quotient).describe() == "0" and q.quotient.euler_characteristic() == 2


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_trivial_action_gives_same_complex(name):
    K = COMPLEXES[name]()
    q = quotient_complex(K, SimplicialAction.trivial(K))
    assert q.subdivisions == 0 and q.quotient == K
    rep = coinvariant_surjection_check(K, SimplicialAction.trivial(K))
    assert rep.surjective and rep.H_G == rep.H_quotient


def test_torus_involution():
    T = grid_torus(4)
    A = SimplicialAction(T, (grid_reflection(4),))
    rep = coinvariant_surjection_check(T, A)
    assert rep.stabilizers_generate and rep.functorial
    assert (rep.H_G, rep.H_quotient, rep.surjective, rep.kernel) == ("C2 x C2", "0", True, "order 4")
    ex = exact_sequence_II_check(T, A)
    assert ex.exact and ex.G_mod_N_ab == "0"


def test_free_rotation_of_circle():
    C = polygon(6)
    A = SimplicialAction(C, (rotation(6, 2),))
    rep = coinvariant_surjection_check(C, A)
    assert not rep.stabilizers_generate and not rep.surjective and rep.cokernel == "C3"
    ex = exact_sequence_II_check(C, A)
    assert (ex.H_G, ex.H_quotient, ex.G_mod_N_ab) == ("Z", "Z", "C3") and ex.exact


def test_point_with_trivial_C2():
    P = SimplicialComplex.from_facets([(0,)], 1)
    ex = exact_sequence_II_check(P, SimplicialAction(P, ((0,),)))
    assert (ex.H_quotient, ex.G_mod_N_ab) == ("0", "0") and ex.exact


def test_non_simplicial_map_is_rejected():
    C = polygon(5)
    with pytest.raises(NotSimplicial):
        SimplicialAction(C, ((1, 0, 2, 3, 4),))


def test_json_roundtrip():
    K = torus_7()
    assert SimplicialComplex.from_json(K.to_json()) == K


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6), st.integers(1, 12))
def test_random_invariant_subcomplexes(seed, k):
    rng = random.Random(seed)
    T = grid_torus(4)
    A = SimplicialAction(T, (grid_reflection(4),))
    keep = rng.sample(T.triangles, k)
    sub = invariant_subcomplex(A, keep)
    rep = coinvariant_surjection_check(sub.complex, sub)
    assert rep.functorial
    if rep.stabilizers_generate:
        assert rep.surjective
    assert exact_sequence_II_check(sub.complex, sub).exact
