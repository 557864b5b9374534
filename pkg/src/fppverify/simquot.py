"""First homology of small simplicial complexes and of their quotients by finite groups.

Checks the two exact-sequence statements relating ``H = H1(K)``, its
coinvariants ``H_G``, ``H' = H1(K/G)`` and ``(G/N)^ab`` where ``N`` is the
subgroup generated by the stabilisers:

* ``H_G -> H'`` is onto when stabilisers generate ``G``;
* ``H_G -> H' -> (G/N)^ab -> 0`` is exact in general.

Complexes have dimension at most 2 and vertices ``0..n-1``; a group
element is a tuple ``p`` with ``p[v]`` the image of vertex ``v``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .abelian import FinAbGroup
from .snf import Cokernel, integer_kernel, solve_in_lattice

Simplex = Tuple[int, ...]
Perm = Tuple[int, ...]
Chain = Dict[Simplex, int]

GROUP_ORDER_CAP = 1000


class NotClosed(ValueError):
    pass


class NotSimplicial(ValueError):
    pass


def _faces(s: Simplex) -> List[Simplex]:
    return [f for k in range(1, len(s)) for f in itertools.combinations(s, k)]


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    simplices: FrozenSet[Simplex]
    labels: Optional[Tuple] = None

    def __post_init__(self):
        for s in self.simplices:
            if list(s) != sorted(set(s)) or not all(0 <= v < self.n_vertices for v in s):
                raise NotClosed(f"simplex {s} is not a sorted tuple of vertices")
            if len(s) > 3:
                raise ValueError("dimension is capped at 2")
            for f in _faces(s):
                if f not in self.simplices:
                    raise NotClosed(f"face {f} of {s} is missing")
        for v in range(self.n_vertices):
            if (v,) not in self.simplices:
                raise NotClosed(f"vertex {v} is missing")

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]], n_vertices: Optional[int] = None,
                    labels=None) -> "SimplicialComplex":
        simplices = set()
        for f in facets:
            s = tuple(sorted(f))
            simplices.add(s)
            simplices.update(_faces(s))
        n = n_vertices if n_vertices is not None else 1 + max((v for s in simplices for v in s), default=-1)
        simplices.update((v,) for v in range(n))
        return cls(n, frozenset(simplices), labels)

    def of_dim(self, d: int) -> List[Simplex]:
        return sorted(s for s in self.simplices if len(s) == d + 1)

    @property
    def edges(self) -> List[Simplex]:
        return self.of_dim(1)

    @property
    def triangles(self) -> List[Simplex]:
        return self.of_dim(2)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def to_json(self) -> dict:
        labels = list(self.labels) if self.labels else list(range(self.n_vertices))
        facets = [s for s in sorted(self.simplices, key=lambda s: (len(s), s))
                  if not any(set(s) < set(t) for t in self.simplices)]
        return {"vertices": labels, "simplices": [[labels[v] for v in s] for s in facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        labels = list(data["vertices"])
        index = {v: i for i, v in enumerate(labels)}
        facets = [[index[v] for v in s] for s in data["simplices"]]
        plain = labels == list(range(len(labels)))
        return cls.from_facets(facets, len(labels), None if plain else tuple(labels))


def _apply(p: Perm, s: Simplex) -> Tuple[Simplex, int]:
    """Image of an oriented simplex: sorted tuple and orientation sign."""
    img = [p[v] for v in s]
    order = sorted(range(len(img)), key=img.__getitem__)
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if not seen[i]:
            j, k = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                k += 1
            if k % 2 == 0:
                sign = -sign
    return tuple(sorted(img)), sign


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``."""
    return tuple(p[q[v]] for v in range(len(q)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for v, w in enumerate(p):
        out[w] = v
    return tuple(out)


@dataclass(frozen=True)
class SimplicialAction:
    complex: SimplicialComplex
    generators: Tuple[Perm, ...]

    def __post_init__(self):
        n = self.complex.n_vertices
        for g in self.generators:
            if sorted(g) != list(range(n)):
                raise NotSimplicial(f"{g} is not a permutation of the {n} vertices")
            for s in self.complex.simplices:
                if _apply(g, s)[0] not in self.complex.simplices:
                    raise NotSimplicial(f"{g} sends {s} outside the complex")

    @classmethod
    def trivial(cls, K: SimplicialComplex) -> "SimplicialAction":
        return cls(K, ())

    @property
    def identity(self) -> Perm:
        return tuple(range(self.complex.n_vertices))

    def elements(self) -> List[Perm]:
        return closure(self.generators, self.identity)

    def orbit_of_vertex(self, v: int) -> List[int]:
        return sorted({g[v] for g in self.elements()})

    def stabilizer(self, s: Simplex) -> List[Perm]:
        return [g for g in self.elements() if _apply(g, s)[0] == s]

    def to_json(self) -> dict:
        labels = list(self.complex.labels) if self.complex.labels else list(range(self.complex.n_vertices))
        return {"generators": [[labels[g[v]] for v in range(len(g))] for g in self.generators]}

    @classmethod
    def from_json(cls, K: SimplicialComplex, data: dict) -> "SimplicialAction":
        labels = list(K.labels) if K.labels else list(range(K.n_vertices))
        index = {v: i for i, v in enumerate(labels)}
        gens = []
        for g in data["generators"]:
            if isinstance(g, dict):
                gens.append(tuple(index[g[str(labels[v])]] if str(labels[v]) in g else index[g[labels[v]]]
                                  for v in range(K.n_vertices)))
            else:
                gens.append(tuple(index[w] for w in g))
        return cls(K, tuple(gens))


def closure(gens: Sequence[Perm], identity: Perm, cap: int = GROUP_ORDER_CAP) -> List[Perm]:
    """Elements of the group generated by ``gens``, breadth first from the identity."""
    out = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    nxt.append(b)
                    if len(out) > cap:
                        raise ValueError(f"group order exceeds {cap}")
        frontier = nxt
    return out


# --- homology -----------------------------------------------------------


@dataclass
class HomologySummary:
    """``H1 = Z1 / B1`` with ``Z1`` spanned by fundamental cycles of a spanning forest.

    Coordinates of a cycle in ``Z1`` are its coefficients on the non-tree
    edges; ``factors`` lists torsion invariant factors then a 0 per free summand.
    """

    complex: SimplicialComplex
    nontree: List[Simplex]
    tree_path: Dict[int, List[Tuple[Simplex, int]]]
    coker: Cokernel

    @property
    def factors(self) -> List[int]:
        return list(self.coker.factors)

    @property
    def torsion(self) -> FinAbGroup:
        return FinAbGroup(tuple(self.coker.torsion_factors))

    @property
    def free_rank(self) -> int:
        return self.coker.free_rank

    @property
    def rank(self) -> int:
        return len(self.coker.factors)

    def is_trivial(self) -> bool:
        return not self.coker.factors

    def describe(self) -> str:
        parts = [f"C{d}" for d in self.coker.torsion_factors] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "0"

    def project(self, chain: Chain) -> List[int]:
        """H1 coordinates of a 1-cycle."""
        index = {e: i for i, e in enumerate(self.nontree)}
        x = [0] * len(self.nontree)
        for e, c in chain.items():
            if e in index:
                x[index[e]] += c
        return self.coker.project(x)

    def cycle(self, coords: Sequence[int]) -> Chain:
        """A 1-cycle representing the given H1 coordinates."""
        x = self.coker.lift(coords)
        out: Chain = {}
        for e, c in zip(self.nontree, x):
            if c:
                for f, s in self.fundamental_cycle(e):
                    out[f] = out.get(f, 0) + c * s
        return {e: c for e, c in out.items() if c}

    def generators(self) -> List[Chain]:
        k = self.rank
        return [self.cycle([int(i == j) for j in range(k)]) for i in range(k)]

    def fundamental_cycle(self, e: Simplex) -> List[Tuple[Simplex, int]]:
        a, b = e
        # e runs a -> b; close it with the tree path b -> root -> a
        path = [(e, 1)]
        path += self.tree_path[b]
        path += [(f, -s) for f, s in self.tree_path[a]]
        acc: Dict[Simplex, int] = {}
        for f, s in path:
            acc[f] = acc.get(f, 0) + s
        return [(f, s) for f, s in acc.items() if s]

    def to_json(self) -> dict:
        return {"torsion": self.torsion.to_json(), "free_rank": self.free_rank, "description": self.describe()}


def boundary(s: Simplex) -> Chain:
    return {s[:i] + s[i + 1:]: (-1) ** i for i in range(len(s))}


def is_cycle(chain: Chain) -> bool:
    acc: Dict[Simplex, int] = {}
    for e, c in chain.items():
        for v, s in boundary(e).items():
            acc[v] = acc.get(v, 0) + c * s
    return all(v == 0 for v in acc.values())


def h1(K: SimplicialComplex) -> HomologySummary:
    """First homology through a spanning forest and a sparse cokernel."""
    adj: Dict[int, List[Tuple[int, Simplex]]] = {v: [] for v in range(K.n_vertices)}
    for e in K.edges:
        adj[e[0]].append((e[1], e))
        adj[e[1]].append((e[0], e))
    # tree_path[v]: oriented edges from v back to the root of its component
    tree_path: Dict[int, List[Tuple[Simplex, int]]] = {}
    tree = set()
    for root in range(K.n_vertices):
        if root in tree_path:
            continue
        tree_path[root] = []
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w, e in adj[u]:
                if w not in tree_path:
                    # step w -> u along e, then u -> root
                    tree_path[w] = [(e, 1 if e == (w, u) else -1)] + tree_path[u]
                    tree.add(e)
                    queue.append(w)
    nontree = [e for e in K.edges if e not in tree]
    index = {e: i for i, e in enumerate(nontree)}
    cols = []
    for t in K.triangles:
        col: Dict[int, int] = {}
        for e, s in boundary(t).items():
            if e in index:
                col[index[e]] = col.get(index[e], 0) + s
        cols.append(col)
    return HomologySummary(K, nontree, tree_path, Cokernel(cols, len(nontree)))


def barycentric_subdivision(K: SimplicialComplex, action: Optional[SimplicialAction] = None):
    """``sd K`` with vertices the simplices of K, and the induced action."""
    old = sorted(K.simplices, key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(old)}
    facets = []
    for s in old:
        for chain in _flags(s):
            facets.append(tuple(index[c] for c in chain))
    sd = SimplicialComplex.from_facets(facets, len(old))
    if action is None:
        return sd, None
    gens = tuple(tuple(index[_apply(g, s)[0]] for s in old) for g in action.generators)
    return sd, SimplicialAction(sd, gens)


def _flags(s: Simplex) -> List[List[Simplex]]:
    """Maximal chains of faces ending at ``s``."""
    if len(s) == 1:
        return [[s]]
    out = []
    for i in range(len(s)):
        for ch in _flags(s[:i] + s[i + 1:]):
            out.append(ch + [s])
    return out


# --- quotients ------------------------------------------------------------


@dataclass
class QuotientResult:
    complex: SimplicialComplex
    quotient: SimplicialComplex
    action: SimplicialAction
    vertex_map: Tuple[int, ...]
    subdivisions: int
    pointwise_fixed: List[Simplex] = field(default_factory=list)

    def push(self, chain: Chain) -> Chain:
        out: Chain = {}
        for s, c in chain.items():
            img, sign = _apply(self.vertex_map, s) if len(set(self.vertex_map[v] for v in s)) == len(s) else (None, 0)
            if img is not None:
                out[img] = out.get(img, 0) + sign * c
        return {s: c for s, c in out.items() if c}


def _vertex_orbits(action: SimplicialAction) -> Tuple[int, ...]:
    elems = action.elements()
    n = action.complex.n_vertices
    label = [-1] * n
    k = 0
    for v in range(n):
        if label[v] < 0:
            for g in elems:
                label[g[v]] = k
            k += 1
    return tuple(label)


def regularity_problems(action: SimplicialAction) -> List[str]:
    K = action.complex
    orb = _vertex_orbits(action)
    elems = action.elements()
    out = []
    for s in K.simplices:
        if len({orb[v] for v in s}) < len(s):
            out.append(f"simplex {s} has two vertices in one orbit")
    images: Dict[Tuple[int, ...], Simplex] = {}
    seen_orbits = set()
    for s in sorted(K.simplices):
        if s in seen_orbits:
            continue
        sorb = {_apply(g, s)[0] for g in elems}
        seen_orbits |= sorb
        img = tuple(sorted(orb[v] for v in s))
        if img in images:
            out.append(f"simplex orbits of {images[img]} and {s} have the same image")
        images[img] = s
    return out


def quotient_complex(K: SimplicialComplex, action: SimplicialAction) -> QuotientResult:
    """``K/G`` as a simplicial complex, subdividing (at most twice) until regular."""
    if action.complex != K:
        raise ValueError("action is on a different complex")
    fixed = []
    for s in K.simplices:
        if len(s) > 1 and any(g != action.identity and all(g[v] == v for v in s) for g in action.elements()):
            fixed.append(s)
    cur_K, cur_A, count = K, action, 0
    while regularity_problems(cur_A):
        if count == 2:
            raise NotSimplicial("action still irregular after two subdivisions")
        cur_K, cur_A = barycentric_subdivision(cur_K, cur_A)
        count += 1
    orb = _vertex_orbits(cur_A)
    facets = {tuple(sorted(orb[v] for v in s)) for s in cur_K.simplices}
    Q = SimplicialComplex.from_facets(facets, 1 + max(orb, default=-1))
    return QuotientResult(cur_K, Q, cur_A, orb, count, sorted(fixed))


# --- induced maps -----------------------------------------------------------


def induced_matrix(H: HomologySummary, g: Perm) -> List[List[int]]:
    """Matrix of ``g_*`` on H1 coordinates (columns are images of generators)."""
    cols = []
    for z in H.generators():
        img: Chain = {}
        for e, c in z.items():
            f, s = _apply(g, e)
            img[f] = img.get(f, 0) + s * c
        cols.append(H.project(img))
    k = H.rank
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def coinvariants_of(H: HomologySummary, gens: Sequence[Perm]) -> Cokernel:
    """``H_G`` as a cokernel on the coordinates of ``H``."""
    k = H.rank
    cols = [{i: d} for i, d in enumerate(H.factors) if d]
    for g in gens:
        A = induced_matrix(H, g)
        for j in range(k):
            col = {i: A[i][j] - int(i == j) for i in range(k) if A[i][j] - int(i == j)}
            cols.append(col)
    return Cokernel(cols, k)


def _describe_factors(factors: Sequence[int]) -> str:
    parts = [f"C{d}" for d in factors if d] + ["Z"] * sum(1 for d in factors if d == 0)
    return " x ".join(parts) if parts else "0"


def _lattice(cols: Sequence[Sequence[int]], dim: int) -> List[List[int]]:
    return [[c[i] for c in cols] for i in range(dim)] if cols else [[] for _ in range(dim)]


def _contains(cols: Sequence[Sequence[int]], dim: int, v: Sequence[int]) -> bool:
    if not any(v):
        return True
    if not cols:
        return False
    return solve_in_lattice(_lattice(cols, dim), list(v)) is not None


def _same_lattice(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], dim: int) -> bool:
    return all(_contains(B, dim, a) for a in A) and all(_contains(A, dim, b) for b in B)


def _relations(H: HomologySummary) -> List[List[int]]:
    k = H.rank
    return [[d * int(i == j) for i in range(k)] for j, d in enumerate(H.factors) if d]


@dataclass
class AbelianizationData:
    """``(G/N)^ab`` with ``N`` generated by stabilisers, on the generator coordinates."""

    coker: Cokernel
    coset_of: Dict[Perm, int]
    coset_vector: List[List[int]]

    @property
    def factors(self) -> List[int]:
        return list(self.coker.factors)

    def coords(self, g: Perm) -> List[int]:
        return self.coker.project(self.coset_vector[self.coset_of[g]])


def stabilizer_subgroup(action: SimplicialAction) -> List[Perm]:
    stab = set()
    for s in action.complex.simplices:
        stab.update(action.stabilizer(s))
    return closure(sorted(stab), action.identity)


def abelianized_quotient(action: SimplicialAction) -> AbelianizationData:
    elems = action.elements()
    gens = list(action.generators)
    stab = set(stabilizer_subgroup(action))
    comms = {compose(compose(a, b), compose(inverse(a), inverse(b))) for a in elems for b in elems}
    N = set(closure(sorted(stab | comms), action.identity))
    coset_of: Dict[Perm, int] = {}
    reps: List[Perm] = []
    for g in elems:
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for n in N:
            coset_of[compose(g, n)] = k
    # Cayley graph of G/N on the generators; tree vectors give word exponents
    r = len(gens)
    vec: List[Optional[List[int]]] = [None] * len(reps)
    vec[coset_of[action.identity]] = [0] * r
    queue = [coset_of[action.identity]]
    relations = []
    edges = []
    while queue:
        c = queue.pop(0)
        for i, s in enumerate(gens):
            d = coset_of[compose(reps[c], s)]
            step = [x + int(j == i) for j, x in enumerate(vec[c])]
            if vec[d] is None:
                vec[d] = step
                queue.append(d)
            else:
                edges.append((step, d))
    for step, d in edges:
        diff = [a - b for a, b in zip(step, vec[d])]
        if any(diff):
            relations.append({j: x for j, x in enumerate(diff) if x})
    return AbelianizationData(Cokernel(relations, r), coset_of, vec)


@dataclass
class SurjectionReport:
    stabilizers_generate: bool
    H: str
    H_G: str
    H_quotient: str
    surjective: bool
    cokernel: str
    kernel: str
    functorial: bool
    subdivisions: int
    pointwise_fixed: List[Simplex]

    @property
    def verdict(self) -> str:
        return "SURJECTIVE" if self.surjective else "NOT_SURJECTIVE"

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["pointwise_fixed"] = [list(s) for s in self.pointwise_fixed]
        d["verdict"] = self.verdict
        return d


@dataclass
class _Setup:
    q: QuotientResult
    H: HomologySummary
    Hq: HomologySummary
    coinv: Cokernel
    P: List[List[int]]          # columns: images of H generators in H' coordinates
    HG_images: List[List[int]]  # images of H_G generators in H'


def _setup(K: SimplicialComplex, action: SimplicialAction) -> _Setup:
    q = quotient_complex(K, action)
    H = h1(q.complex)
    Hq = h1(q.quotient)
    coinv = coinvariants_of(H, q.action.generators)
    P = [Hq.project(q.push(z)) for z in H.generators()]
    HG_images = []
    for i in range(len(coinv.factors)):
        x = coinv.lift([int(i == j) for j in range(len(coinv.factors))])
        v = [sum(P[j][r] * x[j] for j in range(len(P))) for r in range(Hq.rank)]
        HG_images.append(Hq.coker.reduce(v))
    return _Setup(q, H, Hq, coinv, P, HG_images)


def _kernel_description(setup: _Setup) -> str:
    c = setup.coinv
    if c.free_rank:
        return "infinite source; kernel not enumerated"
    order_G = 1
    for d in c.factors:
        order_G *= d
    k = setup.Hq.rank
    im = Cokernel([{i: v for i, v in enumerate(col) if v} for col in setup.HG_images]
                  + [{i: d} for i, d in enumerate(setup.Hq.factors) if d], k) if k else None
    # |image| = |H'| / |H' / image| when H' is finite
    if setup.Hq.free_rank:
        return "target has free part"
    order_Hq = 1
    for d in setup.Hq.factors:
        order_Hq *= d
    order_coker = 1
    for d in (im.factors if im else []):
        order_coker *= d
    image_order = order_Hq // order_coker
    return f"order {order_G // image_order}"


def coinvariant_surjection_check(K: SimplicialComplex, action: SimplicialAction) -> SurjectionReport:
    s = _setup(K, action)
    gen_by_stab = len(stabilizer_subgroup(s.q.action)) == len(s.q.action.elements())
    k = s.Hq.rank
    cols = [{i: v for i, v in enumerate(c) if v} for c in s.HG_images] + \
           [{i: d} for i, d in enumerate(s.Hq.factors) if d]
    coker = Cokernel(cols, k)
    surjective = not coker.factors
    # composite H -> H_G -> H' agrees with the chain map: P kills (g-1)H
    functorial = True
    for g in s.q.action.generators:
        A = induced_matrix(s.H, g)
        for j in range(s.H.rank):
            v = [sum(s.P[i][r] * (A[i][j] - int(i == j)) for i in range(s.H.rank)) for r in range(k)]
            functorial &= not any(s.Hq.coker.reduce(v))
    return SurjectionReport(gen_by_stab, s.H.describe(), _describe_factors(s.coinv.factors), s.Hq.describe(),
                            surjective, _describe_factors(coker.factors), _kernel_description(s), functorial,
                            s.q.subdivisions, s.q.pointwise_fixed)


@dataclass
class ExactSequenceReport:
    H_G: str
    H_quotient: str
    G_mod_N_ab: str
    composite_zero: bool
    exact_middle: bool
    right_surjective: bool

    @property
    def exact(self) -> bool:
        return self.composite_zero and self.exact_middle and self.right_surjective

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["exact"] = self.exact
        return d


def edge_label(q: QuotientResult, e: Simplex, elems: Sequence[Perm]) -> Perm:
    """``h_a^-1 h_b`` for a lift ``(h_a rep(a), h_b rep(b))`` of the quotient edge ``e``."""
    rep: Dict[int, int] = {}
    for v in range(q.complex.n_vertices):
        rep.setdefault(q.vertex_map[v], v)
    for f in q.complex.edges:
        img = tuple(sorted((q.vertex_map[f[0]], q.vertex_map[f[1]])))
        if img != e:
            continue
        x, y = f if q.vertex_map[f[0]] == e[0] else (f[1], f[0])
        ha = next(g for g in elems if g[rep[e[0]]] == x)
        hb = next(g for g in elems if g[rep[e[1]]] == y)
        return compose(inverse(ha), hb)
    raise KeyError(f"edge {e} has no lift")


def exact_sequence_II_check(K: SimplicialComplex, action: SimplicialAction) -> ExactSequenceReport:
    s = _setup(K, action)
    ab = abelianized_quotient(s.q.action)
    elems = s.q.action.elements()
    r = len(ab.factors)
    k = s.Hq.rank
    labels = {e: ab.coords(edge_label(s.q, e, elems)) for e in s.q.quotient.edges}

    def beta(chain: Chain) -> List[int]:
        out = [0] * r
        for e, c in chain.items():
            out = [a + c * b for a, b in zip(out, labels[e])]
        return ab.coker.reduce(out)

    B = [beta(z) for z in s.Hq.generators()]      # columns
    composite_zero = all(not any(ab.coker.reduce([sum(B[j][i] * v[j] for j in range(k)) for i in range(r)]))
                         for v in s.HG_images)
    # right map onto: beta's image together with the relations spans the target
    right = not Cokernel([{i: v for i, v in enumerate(col) if v} for col in B]
                         + [{i: d} for i, d in enumerate(ab.factors) if d], r).factors
    # middle: image(H_G) + relations == ker(beta) + relations inside Z^k
    rel = _relations(s.Hq)
    image = [list(v) for v in s.HG_images] + rel
    if r:
        M = [[B[j][i] for j in range(k)] + [-d * int(i == t) for t in range(r)] for i, d in enumerate(ab.factors)]
        kern = [v[:k] for v in integer_kernel(M, k + r)] + rel
    else:
        kern = [[int(i == j) for i in range(k)] for j in range(k)]
    middle = _same_lattice(image, kern, k) if k else True
    return ExactSequenceReport(_describe_factors(s.coinv.factors), s.Hq.describe(),
                               _describe_factors(ab.factors), composite_zero, middle, right)


# --- test complexes -------------------------------------------------------------


def torus_7() -> SimplicialComplex:
    facets = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
             [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return SimplicialComplex.from_facets(facets, 7)


def rp2_6() -> SimplicialComplex:
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
              (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    return SimplicialComplex.from_facets([[v - 1 for v in f] for f in facets], 6)


def tetrahedron_boundary() -> SimplicialComplex:
    return SimplicialComplex.from_facets(itertools.combinations(range(4), 3), 4)


def polygon(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets([(i, (i + 1) % n) for i in range(n)], n)


def rotation(n: int, step: int) -> Perm:
    return tuple((v + step) % n for v in range(n))


def grid_torus(n: int) -> SimplicialComplex:
    """``n x n`` torus, each square cut along its main diagonal."""
    idx = lambda i, j: (i % n) * n + (j % n)
    facets = []
    for i in range(n):
        for j in range(n):
            facets.append((idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)))
            facets.append((idx(i, j), idx(i, j + 1), idx(i + 1, j + 1)))
    return SimplicialComplex.from_facets(facets, n * n)


def grid_reflection(n: int) -> Perm:
    """``(i, j) -> (-i, -j)``; for even ``n`` it fixes four vertices."""
    return tuple(((-(v // n)) % n) * n + (-(v % n)) % n for v in range(n * n))


def invariant_subcomplex(action: SimplicialAction, keep: Iterable[Simplex]) -> SimplicialAction:
    """Restriction of an action to the smallest invariant subcomplex containing ``keep``."""
    elems = action.elements()
    facets = {_apply(g, s)[0] for s in keep for g in elems}
    sub = SimplicialComplex.from_facets(facets, action.complex.n_vertices)
    return SimplicialAction(sub, action.generators)


def load_complex(path: str) -> SimplicialComplex:
    with open(path) as fh:
        return SimplicialComplex.from_json(json.load(fh))


def load_action(K: SimplicialComplex, path: str) -> SimplicialAction:
    with open(path) as fh:
        return SimplicialAction.from_json(K, json.load(fh))
