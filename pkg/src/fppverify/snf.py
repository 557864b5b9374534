"""Exact integer linear algebra: Smith normal form, kernels and cokernels.

Matrices are plain lists of rows of Python ints, so every intermediate value
is an arbitrary-precision integer and no overflow handling is needed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def shape(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> tuple:
    if not M:
        return 0, (ncols or 0)
    return len(M), len(M[0])


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(A[0])
    if inner == 0:
        ncols = len(B[0]) if B else 0
        return zeros(len(A), ncols)
    ncols = len(B[0])
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ M @ V == S`` with U, V unimodular and S diagonal.

    The nonzero diagonal entries of S are positive and form a divisibility
    chain ``s_1 | s_2 | ...``; zero entries come last.
    """

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> List[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.V)))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SnfDecomposition:
    """Smith normal form with unimodular transforms.

    ``ncols`` is only needed to describe a matrix with zero rows.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if A else (ncols or 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for row in A:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return SnfDecomposition(U=U, S=A, V=V)


def integer_kernel(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Basis of ``{x in Z^n : M x = 0}`` returned as a list of vectors."""
    n = len(M[0]) if M else (ncols or 0)
    if not M:
        return identity(n)
    snf = smith_normal_form(M)
    r = snf.rank
    return [[snf.V[i][j] for i in range(n)] for j in range(r, n)]


def solve_in_lattice(M: Sequence[Sequence[int]], v: Sequence[int],
                     ncols: Optional[int] = None) -> Optional[List[int]]:
    """Return an integer ``x`` with ``M x = v``, or None when none exists."""
    m = len(v)
    n = len(M[0]) if M else (ncols or 0)
    if n == 0:
        return [] if all(x == 0 for x in v) else None
    snf = smith_normal_form(M)
    w = matvec(snf.U, v)
    y = [0] * n
    for i in range(m):
        d = snf.S[i][i] if i < n else 0
        if d == 0:
            if w[i]:
                return None
        else:
            if w[i] % d:
                return None
            y[i] = w[i] // d
    return matvec(snf.V, y)


class Cokernel:
    """The finitely generated abelian group ``Z^m / M Z^k``.

    ``factors`` lists the nontrivial invariant factors followed by a ``0``
    for every free summand.  ``project`` sends ambient vectors to reduced
    coordinates and ``lift`` gives a preimage of a coordinate vector.

    Columns of M holding a unit entry are eliminated on sparse columns
    first; only the remaining core goes through a dense Smith form.  That
    keeps boundary matrices of subdivided complexes tractable.
    """

    def __init__(self, columns: Sequence[Dict[int, int]], nrows: int):
        self.ambient_rank = nrows
        cols = [dict(c) for c in columns if any(c.values())]
        # eliminating row r with unit pivot u in column c rewrites every
        # ambient vector as x_i -= x_r * u * c_i and drops coordinate r
        self._steps: List[tuple] = []
        alive = set(range(nrows))
        changed = True
        while changed:
            changed = False
            for idx, col in enumerate(cols):
                if not col:
                    continue
                r = next((i for i, v in col.items() if v in (1, -1)), None)
                if r is None:
                    continue
                u = col[r]
                pivot = dict(col)
                self._steps.append((r, u, pivot))
                alive.discard(r)
                for other in cols:
                    c = other.get(r)
                    if not c:
                        continue
                    f = c * u
                    for i, v in pivot.items():
                        nv = other.get(i, 0) - f * v
                        if nv:
                            other[i] = nv
                        else:
                            other.pop(i, None)
                cols[idx] = {}
                changed = True
        self._core_rows = sorted(alive)
        pos = {r: k for k, r in enumerate(self._core_rows)}
        live_cols = [c for c in cols if c]
        core = [[c.get(r, 0) for c in live_cols] for r in self._core_rows]
        snf = smith_normal_form(core, ncols=len(live_cols))
        self._snf = snf
        self._pos = pos
        diag = [snf.S[i][i] if i < len(live_cols) else 0 for i in range(len(self._core_rows))]
        self._keep = [i for i, d in enumerate(diag) if d != 1]
        self._mods = [diag[i] for i in self._keep]
        torsion = [(i, d) for i, d in zip(self._keep, self._mods) if d]
        free = [i for i, d in zip(self._keep, self._mods) if d == 0]
        self._order = [i for i, _ in torsion] + free
        self.factors: List[int] = [d for _, d in torsion] + [0] * len(free)
        self._Uinv: Optional[Matrix] = None

    @property
    def torsion_factors(self) -> List[int]:
        return [d for d in self.factors if d]

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    def _reduce_core(self, x: Sequence[int]) -> List[int]:
        x = list(x)
        for r, u, pivot in self._steps:
            xr = x[r]
            if xr:
                f = xr * u
                for i, v in pivot.items():
                    x[i] -= f * v
        return [x[r] for r in self._core_rows]

    def project(self, x: Sequence[int]) -> List[int]:
        core = self._reduce_core(x)
        y = matvec(self._snf.U, core) if core else []
        out = []
        for i, d in zip(self._order, self.factors):
            out.append(y[i] % d if d else y[i])
        return out

    def lift(self, coords: Sequence[int]) -> List[int]:
        if self._Uinv is None:
            self._Uinv = _unimodular_inverse(self._snf.U)
        y = [0] * len(self._core_rows)
        for i, c in zip(self._order, coords):
            y[i] = c
        core = matvec(self._Uinv, y) if y else []
        x = [0] * self.ambient_rank
        for r, v in zip(self._core_rows, core):
            x[r] = v
        return x

    def reduce(self, coords: Sequence[int]) -> List[int]:
        return [c % d if d else c for c, d in zip(coords, self.factors)]


def cokernel(M: Sequence[Sequence[int]], nrows: int) -> Cokernel:
    """Cokernel of a dense matrix with ``nrows`` rows."""
    cols = []
    if M:
        for j in range(len(M[0])):
            cols.append({i: M[i][j] for i in range(nrows) if M[i][j]})
    return Cokernel(cols, nrows)


def _unimodular_inverse(U: Sequence[Sequence[int]]) -> Matrix:
    n = len(U)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(U)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [v / pv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    inv = [row[n:] for row in A]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]


def unimodular_inverse(U: Sequence[Sequence[int]]) -> Matrix:
    return _unimodular_inverse(U)
