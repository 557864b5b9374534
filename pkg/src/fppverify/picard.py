"""The Picard lattice ``Z.L0 + Tor`` of a fake projective plane.

``L0`` is a cube root of the canonical class, so ``K = 3 L0`` and ``L0^2 = 1``.
An automorphism acts by ``(a, t) -> (a, a*tau + A t)`` where ``A`` is its
action on the torsion group and ``tau = sigma^* L0 - L0`` is 3-torsion.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .abelian import FinAbGroup, GroupElement, GroupEndo, GroupMismatch


@dataclass(frozen=True, order=True)
class DivisorClass:
    degree: int
    torsion: GroupElement

    def _check(self, other: "DivisorClass"):
        if other.torsion.group != self.torsion.group:
            raise GroupMismatch("classes live on different surfaces")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.degree + other.degree, self.torsion + other.torsion)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.degree - other.degree, self.torsion - other.torsion)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, -self.torsion)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.degree, k * self.torsion)

    __rmul__ = __mul__

    @property
    def group(self) -> FinAbGroup:
        return self.torsion.group

    def sort_key(self):
        return (self.degree, self.torsion.coords)

    def __str__(self) -> str:
        return f"({self.degree}, {list(self.torsion.coords)})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "torsion": list(self.torsion.coords)}


def divisor(group: FinAbGroup, degree: int, torsion=None) -> DivisorClass:
    t = group.zero if torsion is None else (torsion if isinstance(torsion, GroupElement) else group.element(torsion))
    return DivisorClass(degree, t)


def canonical_class(group: FinAbGroup) -> DivisorClass:
    return DivisorClass(3, group.zero)


@dataclass(frozen=True)
class PicAutomorphism:
    """An automorphism of X seen through its action on Pic.

    ``word`` holds exponents mod 3 in the abstract generators of Aut(X), so
    an automorphism acting trivially on Pic is still a distinct element.
    """

    torsion_action: GroupEndo
    cube_root_offset: GroupElement
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.cube_root_offset.group != self.torsion_action.group:
            raise GroupMismatch("offset and torsion action live on different groups")
        if not (3 * self.cube_root_offset).is_zero():
            raise ValueError("cube root offset must be 3-torsion")

    @classmethod
    def from_action(cls, action: GroupEndo, offset=None, word: Tuple[int, ...] = ()) -> "PicAutomorphism":
        H = action.group
        tau = H.zero if offset is None else (offset if isinstance(offset, GroupElement) else H.element(offset))
        return cls(action, tau, tuple(w % 3 for w in word))

    @property
    def group(self) -> FinAbGroup:
        return self.torsion_action.group

    def __call__(self, D: DivisorClass) -> DivisorClass:
        return act(self, D)

    def compose(self, other: "PicAutomorphism") -> "PicAutomorphism":
        """``self o other``."""
        A = self.torsion_action
        w1, w2 = self.word, other.word
        n = max(len(w1), len(w2))
        w1, w2 = w1 + (0,) * (n - len(w1)), w2 + (0,) * (n - len(w2))
        word = tuple((a + b) % 3 for a, b in zip(w1, w2))
        return PicAutomorphism(A @ other.torsion_action, self.cube_root_offset + A(other.cube_root_offset), word)

    def identity_like(self) -> "PicAutomorphism":
        return PicAutomorphism.from_action(GroupEndo.identity(self.group), word=(0,) * len(self.word))

    def __pow__(self, n: int) -> "PicAutomorphism":
        out = self.identity_like()
        for _ in range(n):
            out = self.compose(out)
        return out

    def is_identity(self) -> bool:
        return (self.torsion_action.is_identity() and self.cube_root_offset.is_zero()
                and not any(self.word))

    def acts_trivially(self) -> bool:
        """True when the induced map on Pic is the identity."""
        return self.torsion_action.is_identity() and self.cube_root_offset.is_zero()

    def order(self, limit: int = 1000) -> int:
        p, n = self, 1
        while not p.is_identity():
            p, n = self.compose(p), n + 1
            if n > limit:
                raise ValueError("order exceeds limit")
        return n

    def fixes_canonical_class(self) -> bool:
        K = canonical_class(self.group)
        return act(self, K) == K

    def to_json(self) -> dict:
        return {"torsion_action": self.torsion_action.to_json(),
                "cube_root_offset": self.cube_root_offset.to_json(),
                "word": list(self.word)}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "PicAutomorphism":
        return cls(GroupEndo.from_json(group, data["torsion_action"]),
                   group.element(data["cube_root_offset"]), tuple(data.get("word", ())))


def act(phi: PicAutomorphism, D: DivisorClass) -> DivisorClass:
    if D.group != phi.group:
        raise GroupMismatch(f"class on {D.group}, automorphism on {phi.group}")
    return DivisorClass(D.degree, D.degree * phi.cube_root_offset + phi.torsion_action(D.torsion))


def intersection(D1: DivisorClass, D2: DivisorClass) -> int:
    D1._check(D2)
    return D1.degree * D2.degree


def arithmetic_genus(D: DivisorClass) -> int:
    if D.degree < 1:
        raise ValueError("arithmetic genus is only taken for positive degree")
    K = canonical_class(D.group)
    twice = intersection(D, D) + intersection(K, D)
    assert twice % 2 == 0, "adjunction parity failed"
    return twice // 2 + 1


@dataclass(frozen=True)
class RestrictionVerdict:
    nontrivial: bool
    reason: str


def torsion_restriction_nonvanishing(D_positive: DivisorClass, tau: GroupElement) -> RestrictionVerdict:
    """Restriction of torsion to a smooth curve of positive square is injective.

    Used as an axiom: the restriction of ``tau`` is nontrivial iff ``tau != 0``.
    """
    if D_positive.degree < 1:
        raise ValueError("the curve class must have positive self-intersection")
    if tau.group != D_positive.group:
        raise GroupMismatch("torsion element from a different surface")
    if tau.is_zero():
        return RestrictionVerdict(False, "tau = 0 restricts trivially")
    return RestrictionVerdict(True, "tau != 0 and Tor Pic(X) -> Pic(C) is injective for C^2 > 0")


def generated_automorphisms(gens: Sequence[PicAutomorphism]) -> List[PicAutomorphism]:
    """All elements of the group generated by ``gens``, identity first."""
    if not gens:
        return []
    ident = gens[0].identity_like()
    seen = {ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = g.compose(a)
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    nxt.append(b)
        frontier = nxt
    return out


def admissible_offsets(action: GroupEndo) -> List[GroupElement]:
    """3-torsion ``tau`` making ``(a, t) -> (a, a tau + A t)`` have order dividing 3.

    Requires ``A^3 = 1``; the cube is the identity iff ``tau + A tau + A^2 tau = 0``.
    """
    H = action.group
    if not (action ** 3).is_identity():
        raise ValueError("torsion action does not have order dividing 3")
    norm = GroupEndo.identity(H) + action + action @ action
    return [t for t in H.elements() if (3 * t).is_zero() and norm(t).is_zero()]
