"""Numerical geometry on a rank-one lattice and cyclic quotient singularities.

Everything here is exact: rationals are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .picard import DivisorClass, arithmetic_genus, canonical_class, intersection
from .snf import determinant

Q = Fraction


class ReiderMode(str, Enum):
    BASEPOINT = "BASEPOINT"
    SEPARATION = "SEPARATION"


# (D.L, allowed D^2) per case; SEP_D is the L^2 = 9, L = 3D case
REIDER_CASES = {
    ReiderMode.BASEPOINT: {"BP_A": (0, (-1,)), "BP_B": (1, (0,))},
    ReiderMode.SEPARATION: {"SEP_A": (0, (-2, -1)), "SEP_B": (1, (-1, 0)), "SEP_C": (2, (0,))},
}
MIN_L2 = {ReiderMode.BASEPOINT: 5, ReiderMode.SEPARATION: 9}


@dataclass(frozen=True)
class ReiderCase:
    case_id: str
    constraint: str
    witness_m: int
    D2: int
    DL: int
    KD: Optional[int] = None
    p_a: Optional[int] = None

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}


def _mode(mode) -> ReiderMode:
    if isinstance(mode, ReiderMode):
        return mode
    m = str(mode).upper()
    return {"BP": ReiderMode.BASEPOINT, "SEP": ReiderMode.SEPARATION}.get(m) or ReiderMode(m)


def reider_filter(L2: int, generator_square: int, L_degree: int, mode) -> List[ReiderCase]:
    """Reider cases realisable by ``D = m * generator`` with ``m >= 1``.

    ``K`` is taken to be three times the generator, as on a fake projective
    plane, so a surviving ``SEP_D`` also reports ``K.D`` and ``p_a(D)``.
    """
    mode = _mode(mode)
    if L2 != L_degree ** 2 * generator_square:
        raise ValueError("L2 does not match the degree of L on this lattice")
    if L2 < MIN_L2[mode]:
        raise ValueError(f"Reider's criterion needs L^2 >= {MIN_L2[mode]} in {mode.value} mode")
    out = []
    top = max(L_degree, 2)
    for case, (dl, squares) in REIDER_CASES[mode].items():
        for m in range(1, top + 1):
            D2, DL = m * m * generator_square, m * L_degree * generator_square
            if DL == dl and D2 in squares:
                out.append(ReiderCase(case, f"DL={dl}, D^2 in {list(squares)}", m, D2, DL))
    if mode is ReiderMode.SEPARATION and L2 == 9:
        for m in range(1, top + 1):
            if L_degree == 3 * m:
                D2 = m * m * generator_square
                KD = 3 * m * generator_square
                p_a = (D2 + KD) // 2 + 1
                out.append(ReiderCase("SEP_D", "L^2=9, L=3D", m, D2, m * L_degree * generator_square, KD, p_a))
    return out


@dataclass(frozen=True)
class GenusCertificate:
    p_a: int
    genus_lower_bound: int
    strict: bool
    verdict: str           # SMOOTH, INCONCLUSIVE or IMPOSSIBLE

    def to_json(self) -> dict:
        return dict(self.__dict__)


def genus_certificate(D: DivisorClass, no_geodesics: bool = True) -> GenusCertificate:
    """Adjunction genus against the lower bound ``3(2g - 2) >= 2 K.D``.

    The bound is strict when the surface carries no totally geodesic
    curve.  The geometric genus never exceeds ``p_a``, with equality iff
    the curve is smooth, so a bound equal to ``p_a`` certifies smoothness.
    """
    p_a = arithmetic_genus(D)
    KD = intersection(canonical_class(D.group), D)
    x = Q(KD, 3) + 1
    bound = math.floor(x) + 1 if no_geodesics else math.ceil(x)
    verdict = "SMOOTH" if bound == p_a else ("IMPOSSIBLE" if bound > p_a else "INCONCLUSIVE")
    return GenusCertificate(p_a, bound, no_geodesics, verdict)


def solve_rational(M: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve the square system ``M x = b`` exactly by Gauss-Jordan elimination."""
    n = len(M)
    A = [[Q(v) for v in row] + [Q(bi)] for row, bi in zip(M, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [v / pv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[i][n] for i in range(n)]


def continued_fraction(n: int, q: int) -> List[int]:
    """Ceiling continued fraction ``n/q = b1 - 1/(b2 - 1/(...))``."""
    out = []
    while q:
        b = -(-n // q)
        out.append(b)
        n, q = q, b * q - n
    return out


def evaluate_continued_fraction(bs: Sequence[int]) -> Fraction:
    x = Q(bs[-1])
    for b in reversed(bs[:-1]):
        x = b - 1 / x
    return x


@dataclass(frozen=True)
class ResolutionGraph:
    n: int
    q: int
    hj: Tuple[int, ...]
    discrepancies: Tuple[Fraction, ...]

    @property
    def self_intersections(self) -> Tuple[int, ...]:
        return tuple(-b for b in self.hj)

    @property
    def intersection_matrix(self) -> List[List[int]]:
        k = len(self.hj)
        return [[-self.hj[i] if i == j else int(abs(i - j) == 1) for j in range(k)] for i in range(k)]

    @property
    def length(self) -> int:
        return len(self.hj)

    def is_negative_definite(self) -> bool:
        M = self.intersection_matrix
        # leading minors of a negative definite matrix alternate, starting negative
        return all((-1) ** k * determinant([r[:k] for r in M[:k]]) > 0 for k in range(1, len(M) + 1))

    def is_du_val(self) -> bool:
        return all(b == 2 for b in self.hj)

    def k_squared_correction(self) -> Fraction:
        """``a^T M a``: the change in ``K^2`` from resolving this point."""
        M = self.intersection_matrix
        a = self.discrepancies
        return sum((a[i] * M[i][j] * a[j] for i in range(len(a)) for j in range(len(a))), Q(0))

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "hj": list(self.hj),
                "self_intersections": list(self.self_intersections),
                "intersection_matrix": self.intersection_matrix,
                "discrepancies": [str(a) for a in self.discrepancies]}


def hirzebruch_jung(n: int, q: int) -> ResolutionGraph:
    """Resolution chain of the cyclic quotient singularity ``1/n(1, q)``.

    Discrepancies ``a`` in ``K = pi^* K + sum a_i E_i`` solve
    ``(K + E_i) E_i = -2``, i.e. ``M a = (b_i - 2)``.
    """
    if not (0 < q < n) or math.gcd(n, q) != 1:
        raise ValueError(f"1/{n}(1,{q}) needs 0 < q < n and gcd(n, q) = 1")
    bs = continued_fraction(n, q)
    k = len(bs)
    M = [[-bs[i] if i == j else int(abs(i - j) == 1) for j in range(k)] for i in range(k)]
    a = solve_rational(M, [b - 2 for b in bs])
    return ResolutionGraph(n, q, tuple(bs), tuple(a))


@dataclass(frozen=True)
class PullbackResult:
    coefficients: Tuple[Tuple[Fraction, ...], ...]
    corrections: Tuple[Fraction, ...]
    down_square: Fraction
    proper_square: Fraction
    pullback_orthogonal: bool

    def to_json(self) -> dict:
        return {"coefficients": [[str(c) for c in cs] for cs in self.coefficients],
                "corrections": [str(c) for c in self.corrections],
                "down_square": str(self.down_square), "proper_square": str(self.proper_square),
                "pullback_orthogonal": self.pullback_orthogonal}


def pullback_proper_transform(graphs: Sequence[ResolutionGraph], incidence: Sequence[Sequence[int]],
                              down_square) -> PullbackResult:
    """Write ``D' = tau^* Dbar - sum c_j E_j`` and return ``D'^2``.

    ``incidence[i][j] = D'.E_j`` at the i-th point.  Since ``tau^* Dbar``
    meets no exceptional curve, ``M c = -incidence``; then
    ``D'^2 = Dbar^2 - c.incidence``.
    """
    if len(graphs) != len(incidence):
        raise ValueError("one incidence vector per singular point")
    coeffs, corr = [], []
    orthogonal = True
    for g, inc in zip(graphs, incidence):
        if len(inc) != g.length or any(v < 0 for v in inc):
            raise ValueError("incidence must be a nonnegative vector along the chain")
        M = g.intersection_matrix
        c = solve_rational(M, [-v for v in inc])
        # tau^* Dbar . E_i = (D' + sum c_j E_j) . E_i must vanish
        for i in range(g.length):
            orthogonal &= inc[i] + sum(c[j] * M[j][i] for j in range(g.length)) == 0
        coeffs.append(tuple(c))
        corr.append(sum((ci * v for ci, v in zip(c, inc)), Q(0)))
    assert orthogonal, "pullback is not orthogonal to the exceptional curves"
    down = Q(down_square)
    return PullbackResult(tuple(coeffs), tuple(corr), down, down - sum(corr, Q(0)), orthogonal)


@dataclass(frozen=True)
class CoefficientCheck:
    intersections: Tuple[Fraction, ...]
    integral: bool
    nonnegative: bool

    @property
    def consistent(self) -> bool:
        return self.integral and self.nonnegative


def check_pullback_coefficients(graph: ResolutionGraph, coefficients: Sequence) -> CoefficientCheck:
    """Intersections ``D'.E_i`` implied by proposed coefficients.

    A proper transform of a curve meets each exceptional curve in a
    nonnegative integer, so any other outcome refutes the coefficients.
    """
    M = graph.intersection_matrix
    c = [Q(x) for x in coefficients]
    inter = tuple(-sum((c[j] * M[j][i] for j in range(len(c))), Q(0)) for i in range(len(c)))
    return CoefficientCheck(inter, all(x.denominator == 1 for x in inter), all(x >= 0 for x in inter))


@dataclass(frozen=True)
class QuotientInvariants:
    group_order: int
    singularities: Tuple[Tuple[int, int, int], ...]
    K2_resolution: Fraction
    euler_resolution: Fraction
    chi: Fraction

    def to_json(self) -> dict:
        return {"group_order": self.group_order, "singularities": [list(s) for s in self.singularities],
                "K2_resolution": str(self.K2_resolution), "euler_resolution": str(self.euler_resolution),
                "chi": str(self.chi)}


def quotient_invariants(group_order: int, singularities: Sequence[Tuple[int, int, int]],
                        e_X: int = 3, K2_X: int = 9, fixed_points: int = 0) -> QuotientInvariants:
    """``K^2``, Euler number and ``chi`` of the minimal resolution of ``X/G``.

    ``singularities`` lists ``(n, q, count)``; ``fixed_points`` is the
    number of points of ``X`` with nontrivial stabiliser.  A chain of ``k``
    curves replaces a point, adding ``k`` to the Euler number.
    """
    K2 = Q(K2_X, group_order)
    e = Q(e_X - fixed_points, group_order)
    for n, q, count in singularities:
        g = hirzebruch_jung(n, q)
        K2 += count * g.k_squared_correction()
        e += count * (g.length + 1)
    chi = (K2 + e) / 12
    if chi.denominator != 1 or K2.denominator != 1 or e.denominator != 1:
        raise ValueError(f"inconsistent input: K^2 = {K2}, e = {e}, chi = {chi}")
    return QuotientInvariants(group_order, tuple(tuple(s) for s in singularities), K2, e, chi)


# points with nontrivial stabiliser: each nontrivial element fixes 3 points
QUOTIENT_PRESETS: Dict[str, dict] = {
    "C3": {"group_order": 3, "singularities": [(3, 2, 3)], "fixed_points": 3},
    "C3xC3": {"group_order": 9, "singularities": [(3, 2, 4)], "fixed_points": 12},
    "C7": {"group_order": 7, "singularities": [(7, 5, 3)], "fixed_points": 3},
    "G21": {"group_order": 21, "singularities": [(3, 2, 3), (7, 5, 1)], "fixed_points": 24},
}


def preset_quotient(name: str) -> QuotientInvariants:
    if name not in QUOTIENT_PRESETS:
        raise KeyError(f"unknown quotient {name!r}; choose from {sorted(QUOTIENT_PRESETS)}")
    return quotient_invariants(**QUOTIENT_PRESETS[name])


def elliptic_pi1_datum(a: int, b: int) -> int:
    """Order of the (cyclic) fundamental group of an ``(a, b)``-elliptic surface."""
    if a < 2 or b < 2:
        raise ValueError("multiplicities must be at least 2")
    return math.gcd(a, b)


ELLIPTIC_TYPES = ((2, 3), (2, 4), (3, 3))
