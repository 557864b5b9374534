"""Effectivity obstructions for degree-1 classes on a fake projective plane.

Effectivity is three-valued: a class is proved non-effective, assumed
effective, or unknown.  Cohomological input (``p_g = 0`` and the vanishing
of ``2 L0 + t`` for invariant ``t`` on ``C3 x C3`` surfaces) enters only as
named axioms.  Two rules do the work:

* orbit sum: if ``L`` is effective so are its images under every
  automorphism, hence ``L + sL + s^2 L`` is effective;
* pairing: if ``A`` and ``B`` are effective so is ``A + B``.

Every proof step stores the classes it used, so a report can be replayed
from scratch by :func:`replay`.
"""
from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .abelian import GroupElement
from .picard import DivisorClass, PicAutomorphism, act, canonical_class, torsion_restriction_nonvanishing
from .registry import FppDescriptor


class AxiomSource(str, Enum):
    PG_ZERO = "PG_ZERO"
    K2017 = "K2017"
    NEGATIVE_DEGREE = "NEGATIVE_DEGREE"
    NONZERO_TORSION_DEG0 = "NONZERO_TORSION_DEG0"
    DERIVED = "DERIVED"


class ProofTag(str, Enum):
    AXIOM = "AXIOM"
    ORBIT_SUM = "ORBIT_SUM"
    PAIRING = "PAIRING"
    AUT_IMAGE = "AUT_IMAGE"


class OutOfScope(ValueError):
    pass


class OrbitNotClosed(ValueError):
    pass


@dataclass(frozen=True)
class NonEffectiveAxiom:
    cls: DivisorClass
    source: AxiomSource


@dataclass(frozen=True)
class Proof:
    """Why ``target`` is not effective.

    ORBIT_SUM: ``witness`` is the orbit sum under ``automorphism``.
    PAIRING: ``target + partner = witness``; ``partner`` is the target
    itself (then ``witness = 2 target``) or a class assumed effective.
    AUT_IMAGE: ``automorphism`` maps ``target`` to the proved ``partner``.
    AXIOM: ``target`` is itself an axiom class.
    """

    target: DivisorClass
    tag: ProofTag
    witness: DivisorClass
    source: str
    automorphism: Optional[PicAutomorphism] = None
    partner: Optional[DivisorClass] = None

    def describe(self, names: Optional[Dict[str, Tuple[int, ...]]] = None) -> str:
        f = lambda D: format_class(D, names)
        if self.tag is ProofTag.AXIOM:
            return f"{f(self.target)} is non-effective by axiom {self.source}"
        if self.tag is ProofTag.ORBIT_SUM:
            return (f"{f(self.target)}: orbit sum under {_word(self.automorphism)} is "
                    f"{f(self.witness)}, non-effective by {self.source}")
        if self.tag is ProofTag.AUT_IMAGE:
            return (f"{f(self.target)}: its image {f(self.partner)} under "
                    f"{_word(self.automorphism)} is non-effective")
        if self.partner == self.target:
            return (f"{f(self.target)}: twice it is {f(self.witness)}, non-effective by {self.source}")
        return (f"{f(self.target)}: adding the effective {f(self.partner)} gives "
                f"{f(self.witness)}, non-effective by {self.source}")

    def to_json(self) -> dict:
        out = {"class": self.target.to_json(), "tag": self.tag.value,
               "witness": self.witness.to_json(), "source": self.source}
        if self.automorphism is not None:
            out["automorphism_word"] = list(self.automorphism.word)
        if self.partner is not None:
            out["partner"] = self.partner.to_json()
        return out


def _word(phi: Optional[PicAutomorphism]) -> str:
    # words in the generators a, b of Aut(X); a lone generator is written s
    if phi is None:
        return "?"
    letters = "s" if len(phi.word) == 1 else "ab"
    parts = [c if e == 1 else f"{c}^{e}" for c, e in zip(letters, phi.word) if e]
    return " ".join(parts) or "1"


def format_class(D: DivisorClass, names: Optional[Dict[str, Tuple[int, ...]]] = None) -> str:
    """``2L0 + t2 + 3t7`` style rendering against named torsion generators."""
    deg = {0: "", 1: "L0"}.get(D.degree, f"{D.degree}L0")
    tor = _torsion_name(D.torsion, names)
    if not deg:
        return tor or "0"
    return f"{deg} + {tor}" if tor else deg


def _torsion_name(t: GroupElement, names: Optional[Dict[str, Tuple[int, ...]]]) -> str:
    if t.is_zero():
        return ""
    if names:
        combo = _express(t, names)
        if combo is not None:
            return combo
    return str(list(t.coords))


def _express(t: GroupElement, names: Dict[str, Tuple[int, ...]]) -> Optional[str]:
    # smallest nonnegative combination of named generators, by brute force
    H = t.group
    keys = sorted(names)
    gens = [H.element(names[k]) for k in keys]
    orders = [g.order for g in gens]
    best = None

    def rec(i, acc, coeffs):
        nonlocal best
        if i == len(gens):
            if acc == t:
                cost = sum(1 for c in coeffs if c)
                if best is None or (cost, coeffs) < best[:2]:
                    best = (cost, list(coeffs), None)
            return
        for c in range(orders[i]):
            rec(i + 1, acc + gens[i] * c, coeffs + [c])

    if H.order > 5000:
        return None
    rec(0, H.zero, [])
    if best is None:
        return None
    parts = []
    for k, c in zip(keys, best[1]):
        if c:
            parts.append(k if c == 1 else f"{c}{k}")
    return " + ".join(parts)


class AxiomSet:
    """Classes known to be non-effective, plus optional assumed-effective ones."""

    def __init__(self, surface: FppDescriptor, aut: Sequence[PicAutomorphism],
                 extra: Iterable[DivisorClass] = (), assumed_effective: Iterable[DivisorClass] = ()):
        self.surface = surface
        self.aut = list(aut)
        self.extra: Set[DivisorClass] = set(extra)
        self.assumed_effective: Set[DivisorClass] = set(assumed_effective)
        self.derived: Dict[DivisorClass, Proof] = {}

    def source(self, D: DivisorClass) -> Optional[str]:
        """Name of the axiom (or derivation) making ``D`` non-effective."""
        if D.degree < 0:
            return AxiomSource.NEGATIVE_DEGREE.value
        if D.degree == 0:
            return None if D.torsion.is_zero() else AxiomSource.NONZERO_TORSION_DEG0.value
        if D == canonical_class(D.group):
            return AxiomSource.PG_ZERO.value
        if D.degree == 2 and self.surface.aut_type == "C3xC3" and all(act(g, D) == D for g in self.aut):
            return AxiomSource.K2017.value
        if D in self.extra:
            return AxiomSource.DERIVED.value
        if D in self.derived:
            return AxiomSource.DERIVED.value
        return None

    def axioms(self, degrees: Iterable[int] = (0, 2, 3)) -> List[NonEffectiveAxiom]:
        H = self.surface.h1
        out = []
        for d in degrees:
            for t in H.elements():
                D = DivisorClass(d, t)
                s = self.source(D)
                if s is not None and s != AxiomSource.DERIVED.value:
                    out.append(NonEffectiveAxiom(D, AxiomSource(s)))
        return out


def order3_elements(aut: Sequence[PicAutomorphism]) -> List[PicAutomorphism]:
    return [g for g in aut if not g.is_identity() and g.order() == 3]


def orbit_sum_rule(L: DivisorClass, sigma: PicAutomorphism, axioms: AxiomSet) -> Optional[Proof]:
    """Proof that ``L`` is not effective from its ``sigma``-orbit sum, if any."""
    if sigma.order() != 3:
        raise ValueError("orbit sums are taken over automorphisms of order 3")
    s1 = act(sigma, L)
    total = L + s1 + act(sigma, s1)
    src = axioms.source(total)
    if src is None:
        return None
    return Proof(L, ProofTag.ORBIT_SUM, total, src, automorphism=sigma)


@dataclass(frozen=True)
class Exclusion:
    """``A`` and ``B`` are not both effective."""

    a: DivisorClass
    b: DivisorClass
    witness: DivisorClass
    source: str


def pairing_rule(A: DivisorClass, B: DivisorClass, axioms: AxiomSet):
    """Exclusion between ``A`` and ``B`` or, with one side known effective, a proof.

    With ``A == B`` the constraint reads "2A non-effective", which already
    makes ``A`` non-effective.
    """
    total = A + B
    src = axioms.source(total)
    if src is None:
        return None
    if A == B:
        return Proof(A, ProofTag.PAIRING, total, src, partner=A)
    if B in axioms.assumed_effective:
        return Proof(A, ProofTag.PAIRING, total, src, partner=B)
    if A in axioms.assumed_effective:
        return Proof(B, ProofTag.PAIRING, total, src, partner=A)
    lo, hi = sorted((A, B), key=DivisorClass.sort_key)
    return Exclusion(lo, hi, total, src)


@dataclass
class VanishingReport:
    surface: str
    surface_id: str
    branch_offsets: List[Tuple[Tuple[int, ...], ...]]
    candidates: List[DivisorClass]
    proved: Dict[DivisorClass, Proof]
    undetermined: List[DivisorClass]
    exclusions: List[Exclusion]
    orbits: List[List[DivisorClass]]
    orbit_exclusions: List[Tuple[int, int]]
    max_simultaneously_effective: int
    branch_independent: bool
    names: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def proved_noneffective(self) -> List[DivisorClass]:
        return sorted(self.proved, key=DivisorClass.sort_key)

    def explain(self, D: DivisorClass) -> str:
        f = lambda X: format_class(X, self.names)
        if D in self.proved:
            lines = []
            seen = set()
            cur: Optional[DivisorClass] = D
            while cur is not None and cur not in seen:
                seen.add(cur)
                p = self.proved[cur]
                lines.append(p.describe(self.names))
                cur = p.partner if p.tag is ProofTag.AUT_IMAGE else None
            return "\n".join(lines)
        if D in self.undetermined:
            partners = [e.b if e.a == D else e.a for e in self.exclusions if D in (e.a, e.b)]
            orbit = next(o for o in self.orbits if D in o)
            lines = [f"{f(D)} is undetermined; its Aut-orbit is {{{', '.join(f(x) for x in orbit)}}}"]
            for P in partners:
                lines.append(f"  not effective together with {f(P)} (sum {f(D + P)})")
            return "\n".join(lines)
        raise KeyError(f"{f(D)} is not a degree-1 candidate")

    def to_json(self) -> dict:
        f = lambda X: format_class(X, self.names)
        return {
            "surface": self.surface,
            "id": self.surface_id,
            "branch_offsets": [[list(o) for o in b] for b in self.branch_offsets],
            "branch_independent": self.branch_independent,
            "candidates": [c.to_json() for c in self.candidates],
            "proved_noneffective": [dict(self.proved[c].to_json(), name=f(c)) for c in self.proved_noneffective],
            "undetermined": [dict(c.to_json(), name=f(c)) for c in self.undetermined],
            "exclusions": [{"a": e.a.to_json(), "b": e.b.to_json(), "sum": e.witness.to_json(),
                            "source": e.source} for e in self.exclusions],
            "undetermined_orbits": [[f(c) for c in o] for o in self.orbits],
            "orbit_exclusions": [list(p) for p in self.orbit_exclusions],
            "max_simultaneously_effective": self.max_simultaneously_effective,
            "notes": list(self.notes),
        }


@dataclass
class _BranchResult:
    proved: Dict[DivisorClass, Proof]
    undetermined: List[DivisorClass]
    exclusions: List[Exclusion]
    aut: List[PicAutomorphism]


def _run_branch(surface: FppDescriptor, extra, assumed) -> _BranchResult:
    aut = surface.automorphisms()
    axioms = AxiomSet(surface, aut, extra, assumed)
    sigmas = order3_elements(aut)
    candidates = sorted((DivisorClass(1, t) for t in surface.h1.elements()), key=DivisorClass.sort_key)
    proved: Dict[DivisorClass, Proof] = {}
    for D in candidates:
        s = axioms.source(D)
        if s is not None and D not in axioms.derived:
            proved[D] = Proof(D, ProofTag.AXIOM, D, s)
    changed = True
    while changed:
        changed = False
        for D in candidates:
            if D in proved:
                continue
            proof = None
            for s in sigmas:
                proof = orbit_sum_rule(D, s, axioms)
                if proof:
                    break
            if proof is None:
                for B in [D] + sorted(axioms.assumed_effective, key=DivisorClass.sort_key):
                    r = pairing_rule(D, B, axioms)
                    if isinstance(r, Proof) and r.target == D:
                        proof = r
                        break
            if proof is None:
                for g in aut:
                    img = act(g, D)
                    if img != D and img in proved:
                        proof = Proof(D, ProofTag.AUT_IMAGE, proved[img].witness, proved[img].source,
                                      automorphism=g, partner=img)
                        break
            if proof is not None:
                proved[D] = proof
                axioms.derived[D] = proof
                changed = True
    undetermined = [D for D in candidates if D not in proved]
    exclusions = []
    for i, A in enumerate(undetermined):
        for B in undetermined[i + 1:]:
            r = pairing_rule(A, B, axioms)
            if isinstance(r, Exclusion):
                exclusions.append(r)
    return _BranchResult(proved, undetermined, exclusions, aut)


def _orbits(classes: Sequence[DivisorClass], aut: Sequence[PicAutomorphism]) -> List[List[DivisorClass]]:
    left = list(classes)
    out = []
    while left:
        D = left[0]
        orb = sorted({act(g, D) for g in aut}, key=DivisorClass.sort_key)
        out.append(orb)
        left = [x for x in left if x not in orb]
    return out


def _max_effective(orbits: List[List[DivisorClass]], blocked: Set[Tuple[int, int]]) -> int:
    # effectivity is closed under Aut, so a consistent effective set is a
    # union of orbits forming an independent set in the orbit graph
    n = len(orbits)
    best = 0
    if n > 20:
        raise ValueError("too many undetermined orbits for exhaustive search")
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if any((a, b) in blocked for a in idx for b in idx if a < b):
            continue
        best = max(best, sum(len(orbits[i]) for i in idx))
    return best


def run_vanishing(surface: FppDescriptor, extra_axioms: Iterable[DivisorClass] = (),
                  assumed_effective: Iterable[DivisorClass] = ()) -> VanishingReport:
    """Fixed-point iteration of the orbit-sum and pairing rules on degree-1 classes.

    Surfaces whose cube-root offset is not pinned down are run once per
    admissible offset; a class counts as proved only when every branch
    proves it.
    """
    if not surface.lifts_to_su21:
        raise OutOfScope(f"{surface.label}: no cube root of K, the lattice model does not apply")
    if surface.aut_type == "G21":
        raise OutOfScope("automorphism group of order 21 is outside the registry scope")
    extra, assumed = list(extra_axioms), list(assumed_effective)
    branches = surface.offset_branches()
    results = [_run_branch(b, extra, assumed) for b in branches]
    candidates = sorted((DivisorClass(1, t) for t in surface.h1.elements()), key=DivisorClass.sort_key)
    proved_sets = [set(r.proved) for r in results]
    common = set.intersection(*proved_sets)
    independent = all(s == proved_sets[0] for s in proved_sets)
    first = results[0]
    proved = {D: next(r.proved[D] for r in results) for D in candidates if D in common}
    undetermined = [D for D in candidates if D not in common]
    # exclusions valid in every branch
    excl_sets = [{(e.a, e.b) for e in r.exclusions} for r in results]
    shared = set.intersection(*excl_sets) if excl_sets else set()
    exclusions = [e for e in first.exclusions if (e.a, e.b) in shared
                  and e.a in undetermined and e.b in undetermined]
    orbits = _orbits(undetermined, first.aut)
    index = {D: i for i, o in enumerate(orbits) for D in o}
    blocked = sorted({tuple(sorted((index[e.a], index[e.b]))) for e in exclusions})
    # an orbit excluded against itself can never be effective
    dead = {a for a, b in blocked if a == b}
    cross = {(a, b) for a, b in blocked if a != b}
    max_eff = _max_effective([[] if i in dead else o for i, o in enumerate(orbits)], cross)
    names = dict(surface.torsion_names)
    notes = []
    if len(branches) > 1:
        notes.append(f"run over {len(branches)} admissible cube-root offsets; "
                     + ("identical in every branch" if independent else "branches differ, intersection reported"))
    if len(orbits) == 2 and all(len(o) == 3 for o in orbits) and blocked == [(0, 1)]:
        notes.append("the two undetermined orbits are exchanged by relabelling t7 -> 3t7, "
                     "so at most three classes, forming one orbit, can be effective")
    return VanishingReport(surface.label, surface.id, [b.offset() for b in branches], candidates,
                           proved, undetermined, exclusions, orbits, [list(b) for b in blocked],
                           max_eff, independent, names, notes)


def replay(report: VanishingReport, surface: FppDescriptor) -> List[str]:
    """Re-verify every proof and exclusion from scratch; returns the failures."""
    failures = []
    for branch in surface.offset_branches():
        baut = branch.automorphisms()
        axioms = AxiomSet(branch, baut)
        for D, p in report.proved.items():
            ok = _replay_proof(D, p, report, axioms, branch)
            if not ok:
                failures.append(f"{format_class(D, report.names)} ({p.tag.value}) in branch {branch.offset()}")
    for e in report.exclusions:
        if e.a + e.b != e.witness:
            failures.append(f"exclusion sum mismatch for {e.a} + {e.b}")
    return failures


def _replay_proof(D, p: Proof, report, axioms: AxiomSet, branch: FppDescriptor) -> bool:
    if p.tag is ProofTag.AXIOM:
        return axioms.source(D) is not None
    if p.tag is ProofTag.ORBIT_SUM:
        # the stored automorphism belongs to one branch; any order-3 element works on replay
        for s in order3_elements(axioms.aut):
            s1 = act(s, D)
            total = D + s1 + act(s, s1)
            if _known(total, report, axioms, D):
                return True
        return False
    if p.tag is ProofTag.PAIRING:
        return D + p.partner == p.witness and _known(p.witness, report, axioms, D) and (
            p.partner == D or p.partner in axioms.assumed_effective)
    if p.tag is ProofTag.AUT_IMAGE:
        return any(act(g, D) == p.partner for g in axioms.aut) and p.partner in report.proved
    return False


def _known(total: DivisorClass, report: VanishingReport, axioms: AxiomSet, D: DivisorClass) -> bool:
    if axioms.source(total) is not None:
        return True
    return total.degree == 1 and total in report.proved and total != D


class PairCase(str, Enum):
    DISTINCT = "DISTINCT"
    INFINITELY_NEAR_1 = "INFINITELY_NEAR_1"
    INFINITELY_NEAR_2 = "INFINITELY_NEAR_2"


@dataclass(frozen=True)
class SeparationCertificate:
    case: PairCase
    orbit: Tuple[DivisorClass, ...]
    delta: GroupElement
    contradiction: bool
    reason: str

    @property
    def verdict(self) -> str:
        return "CONTRADICTION" if self.contradiction else "INCONCLUSIVE"

    def to_json(self) -> dict:
        return {"case": self.case.value, "orbit": [D.to_json() for D in self.orbit],
                "delta": list(self.delta.coords), "verdict": self.verdict, "reason": self.reason}


def separation_obstruction(D_assumed: Sequence[DivisorClass], pair_case: PairCase,
                           sigma: Optional[PicAutomorphism] = None) -> SeparationCertificate:
    """Torsion class that would have to restrict trivially to ``D1``.

    ``D_assumed = [D1, D2, D3]`` is a ``sigma``-orbit of degree-1 classes.
    If two points on ``D1`` were not separated, ``K - D1`` restricted to
    ``D1`` would equal the restriction of ``D2 + D3`` (distinct points) or
    of ``2 D2`` / ``2 D3`` (infinitely near ones); the difference is a
    torsion class, and a nonzero torsion class restricts nontrivially.
    """
    D1, D2, D3 = D_assumed
    if sigma is not None:
        if act(sigma, D1) != D2 or act(sigma, D2) != D3 or act(sigma, D3) != D1:
            raise OrbitNotClosed("classes are not a sigma-orbit D1 -> D2 -> D3 -> D1")
    K = canonical_class(D1.group)
    residual = K - D1
    lhs = {PairCase.DISTINCT: D2 + D3, PairCase.INFINITELY_NEAR_1: D2 * 2,
           PairCase.INFINITELY_NEAR_2: D3 * 2}[PairCase(pair_case)]
    diff = lhs - residual
    assert diff.degree == 0
    v = torsion_restriction_nonvanishing(D1, diff.torsion)
    return SeparationCertificate(PairCase(pair_case), tuple(D_assumed), diff.torsion, v.nontrivial, v.reason)


class Verdict(str, Enum):
    EMBEDDING = "EMBEDDING"
    EMBEDDING_OUTSIDE_FIXED_POINTS = "EMBEDDING_OUTSIDE_FIXED_POINTS"
    UNRESOLVED = "UNRESOLVED"


@dataclass
class BicanonicalVerdict:
    surface: str
    verdict: Verdict
    reider_cases: List[str]
    undetermined: int
    certificates: List[SeparationCertificate]
    exceptional_points: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"surface": self.surface, "verdict": self.verdict.value, "reider_cases": self.reider_cases,
                "undetermined": self.undetermined, "exceptional_points": self.exceptional_points,
                "certificates": [c.to_json() for c in self.certificates], "notes": list(self.notes)}


def _rotating(orbit: Sequence[DivisorClass], aut: Sequence[PicAutomorphism]):
    """An automorphism cycling ``orbit`` and a nontrivial one fixing each member."""
    if len(orbit) != 3:
        return None
    rot = next((g for g in order3_elements(aut) if act(g, orbit[0]) == orbit[1]
                and act(g, orbit[1]) == orbit[2]), None)
    if rot is None:
        rot = next((g for g in order3_elements(aut) if act(g, orbit[0]) == orbit[2]
                    and act(g, orbit[2]) == orbit[1]), None)
        if rot is None:
            return None
        orbit = [orbit[0], orbit[2], orbit[1]]
    fix = next((g for g in order3_elements(aut) if all(act(g, D) == D for D in orbit)), None)
    return (rot, list(orbit), fix) if fix is not None else None


def bicanonical_verdict(surface: FppDescriptor) -> BicanonicalVerdict:
    """Whether the bicanonical map is an embedding, combining all obstructions.

    Only the ``K = 3D`` Reider case can obstruct.  With no candidate curve
    left the map embeds.  On ``C3 x C3`` surfaces an undetermined orbit is
    rotated by one automorphism and fixed classwise by another, whose fixed
    points are the only candidates for an unseparated pair; each pair shape
    is contradicted by a nonzero torsion difference.
    """
    from .geometry import reider_filter

    if surface.aut_type == "G21":
        raise OutOfScope("automorphism group of order 21 is outside the registry scope")
    rep = run_vanishing(surface)
    cases = [c.case_id for c in reider_filter(9, 1, 3, "SEPARATION")]
    certs: List[SeparationCertificate] = []
    if not rep.undetermined:
        return BicanonicalVerdict(surface.label, Verdict.EMBEDDING, cases, 0, certs,
                                  notes=["no degree-1 class can be effective"])
    if surface.table == 2:
        points = 2 if rep.max_simultaneously_effective <= 1 else 3
        note = (f"{len(rep.undetermined)} classes remain undetermined; Aut fixes each of them, "
                f"so its fixed points on the curves are the only unseparated candidates")
        return BicanonicalVerdict(surface.label, Verdict.EMBEDDING_OUTSIDE_FIXED_POINTS, cases,
                                  len(rep.undetermined), certs, points, [note])
    aut = surface.automorphisms()
    all_contradicted = True
    for orbit in rep.orbits:
        r = _rotating(orbit, aut)
        if r is None:
            all_contradicted = False
            continue
        sigma, ordered, _ = r
        for case in PairCase:
            c = separation_obstruction(ordered, case, sigma)
            certs.append(c)
            all_contradicted &= c.contradiction
    verdict = Verdict.EMBEDDING if all_contradicted else Verdict.UNRESOLVED
    return BicanonicalVerdict(surface.label, verdict, cases, len(rep.undetermined), certs)


def suggest(name: str, options: Iterable[str], n: int = 3) -> List[str]:
    return difflib.get_close_matches(name, list(options), n=n, cutoff=0.3)
