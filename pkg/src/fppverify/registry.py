"""The ten fake projective plane pairs handled here, with their automorphism data.

Torsion actions are not tabulated in the literature; the ones stored are the
simplest choices reproducing the quotient fundamental groups: multiplication
by 2 on a moved ``C7`` (by 3 on a moved ``C13``, since 2 has order 12 mod 13),
the companion matrix of ``x^2 + x + 1`` on a moved ``C2^2``, identity
elsewhere.  Registry consistency checks validate them against the table.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .abelian import FinAbGroup, GroupElement, GroupEndo, ProductIso, coinvariants, cyclic_product
from .picard import PicAutomorphism, admissible_offsets, generated_automorphisms

ABELIANIZATION_ORDER = {"1": 1, "S3": 2, "Q8": 4}


class UnknownSurface(KeyError):
    pass


def abelianization_order(label: str) -> int:
    if label in ABELIANIZATION_ORDER:
        return ABELIANIZATION_ORDER[label]
    m = re.fullmatch(r"C(\d+)", label)
    if not m:
        raise ValueError(f"unknown group label {label!r}")
    return int(m.group(1))


@dataclass(frozen=True)
class FppDescriptor:
    id: str
    label: str
    latex_label: str
    table: int
    row: int
    aut_type: str                              # "C3", "C3xC3" or "G21"
    h1: FinAbGroup
    aut_generators: Tuple[PicAutomorphism, ...]
    subgroup_generators: Tuple[PicAutomorphism, ...]   # one per order-3 subgroup
    quotient_pi1: Tuple[str, ...]                      # aligned with subgroup_generators
    lifts_to_su21: bool
    torsion_names: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()
    notes: Tuple[str, ...] = ()

    def named(self, name: str) -> GroupElement:
        return self.h1.element(dict(self.torsion_names)[name])

    def automorphisms(self) -> List[PicAutomorphism]:
        return generated_automorphisms(self.aut_generators)

    def has_3_torsion(self) -> bool:
        return self.h1.order % 3 == 0

    def offset_branches(self) -> List["FppDescriptor"]:
        """One descriptor per admissible cube-root offset of the generator.

        Only cyclic automorphism groups branch; with ``C3 x C3`` every row
        in the registry is free of 3-torsion, so the offset is forced to 0.
        """
        if self.aut_type != "C3" or not self.has_3_torsion():
            return [self]
        (sigma,) = self.aut_generators
        out = []
        for tau in admissible_offsets(sigma.torsion_action):
            s = PicAutomorphism(sigma.torsion_action, tau, sigma.word)
            out.append(replace(self, aut_generators=(s,), subgroup_generators=(s,)))
        return out

    def offset(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(g.cube_root_offset.coords for g in self.aut_generators)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "latex_label": self.latex_label,
            "table": self.table,
            "row": self.row,
            "aut_type": self.aut_type,
            "h1": self.h1.to_json(),
            "torsion_names": {k: list(v) for k, v in self.torsion_names},
            "aut_generators": [g.to_json() for g in self.aut_generators],
            "order3_subgroups": [
                {"generator": g.to_json(), "quotient_pi1": q, "abelianization_order": abelianization_order(q)}
                for g, q in zip(self.subgroup_generators, self.quotient_pi1)
            ],
            "lifts_to_su21": self.lifts_to_su21,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FppDescriptor":
        H = FinAbGroup.from_json(data["h1"])
        subs = data["order3_subgroups"]
        return cls(
            id=data["id"],
            label=data["label"],
            latex_label=data["latex_label"],
            table=data["table"],
            row=data["row"],
            aut_type=data["aut_type"],
            h1=H,
            aut_generators=tuple(PicAutomorphism.from_json(H, g) for g in data["aut_generators"]),
            subgroup_generators=tuple(PicAutomorphism.from_json(H, s["generator"]) for s in subs),
            quotient_pi1=tuple(s["quotient_pi1"] for s in subs),
            lifts_to_su21=data["lifts_to_su21"],
            torsion_names=tuple(sorted((k, tuple(v)) for k, v in data.get("torsion_names", {}).items())),
            notes=tuple(data.get("notes", ())),
        )


def _names(iso: ProductIso, names: Dict[str, Sequence[int]]) -> Tuple[Tuple[str, Tuple[int, ...]], ...]:
    return tuple(sorted((k, iso.element(v).coords) for k, v in names.items()))


def _companion(iso: ProductIso, first: int, scalars: Sequence[int]) -> GroupEndo:
    """Companion matrix of x^2+x+1 on coordinates (first, first+1), scalars elsewhere."""
    r = len(iso.orders)
    M = [[scalars[i] * int(i == j) for j in range(r)] for i in range(r)]
    M[first][first], M[first][first + 1] = 0, 1
    M[first + 1][first], M[first + 1][first + 1] = 1, 1
    return iso.endo(M)


def _pic(action: GroupEndo, word: Tuple[int, ...] = (1,)) -> PicAutomorphism:
    return PicAutomorphism.from_action(action, word=word)


def _c3xc3_subgroups(a: PicAutomorphism, b: PicAutomorphism) -> Tuple[PicAutomorphism, ...]:
    """Generators of <a>, <b>, <ab>, <ab^2>."""
    return (a, b, a.compose(b), a.compose(b.compose(b)))


def _build() -> Tuple[FppDescriptor, ...]:
    rows = []

    iso = cyclic_product([3, 7])
    s = _pic(iso.diagonal_endo([1, 2]))
    rows.append(FppDescriptor(
        "T1.1", "(a=15, p=2, {3,5}, D_3)", r"(a=15, p=2, \{3,5\}, D_3)", 1, 1, "C3", iso.group,
        (s,), (s,), ("C3",), True, _names(iso, {"t3": [1, 0], "t7": [0, 1]})))

    iso = cyclic_product([2, 2, 3])
    s = _pic(_companion(iso, 0, [1, 1, 1]))
    rows.append(FppDescriptor(
        "T1.2", "(a=15, p=2, {3,5}, 3_3)", r"(a=15, p=2, \{3,5\}, 3_3)", 1, 2, "C3", iso.group,
        (s,), (s,), ("C3",), True, _names(iso, {"u1": [1, 0, 0], "u2": [0, 1, 0], "t3": [0, 0, 1]})))

    iso = cyclic_product([3])
    s = _pic(iso.diagonal_endo([1]))
    rows.append(FppDescriptor(
        "T1.3", "(a=15, p=2, {3,5}, (D3)_3)", r"(a=15, p=2, \{3,5\}, (D3)_3)", 1, 3, "C3", iso.group,
        (s,), (s,), ("C3",), True, _names(iso, {"t3": [1]})))

    iso = cyclic_product([7])
    nu, sigma = _pic(iso.diagonal_endo([1]), (1, 0)), _pic(iso.diagonal_endo([2]), (0, 1))
    rows.append(FppDescriptor(
        "T1.4", "(C2, p=2, {3}, d_3D_3)", r"(\mathcal{C}2, p=2, \{3\}, d_3D_3)", 1, 4, "C3xC3", iso.group,
        (nu, sigma), _c3xc3_subgroups(nu, sigma), ("C7", "1", "1", "1"), True, _names(iso, {"t7": [1]})))

    iso = cyclic_product([7])
    s = _pic(iso.diagonal_endo([2]))
    rows.append(FppDescriptor(
        "T1.5", "(C10, p=2, {17-}, D_3)", r"(\mathcal{C}10, p=2, \{17-\}, D_3)", 1, 5, "C3", iso.group,
        (s,), (s,), ("1",), True, _names(iso, {"t7": [1]})))

    iso = cyclic_product([2, 2, 13])
    alpha = _pic(_companion(iso, 0, [1, 1, 1]), (1, 0))
    beta = _pic(iso.diagonal_endo([1, 1, 3]), (0, 1))
    rows.append(FppDescriptor(
        "T1.6", "(C18, p=3, ∅, d_3D_3)", r"(\mathcal{C}18, p=3, \emptyset, d_3D_3)", 1, 6, "C3xC3", iso.group,
        (alpha, beta), _c3xc3_subgroups(alpha, beta), ("C13", "Q8", "1", "1"), True,
        _names(iso, {"u1": [1, 0, 0], "u2": [0, 1, 0], "t13": [0, 0, 1]})))

    iso = cyclic_product([2, 7])
    nu, sigma = _pic(iso.diagonal_endo([1, 1]), (1, 0)), _pic(iso.diagonal_endo([1, 2]), (0, 1))
    rows.append(FppDescriptor(
        "T1.7", "(C2, p=2, ∅, d_3D_3)", r"(\mathcal{C}2, p=2, \emptyset, d_3D_3)", 1, 7, "C3xC3", iso.group,
        (nu, sigma), _c3xc3_subgroups(nu, sigma), ("C14", "S3", "C2", "C2"), True,
        _names(iso, {"t2": [1, 0], "t7": [0, 1]})))

    table2 = [
        ("T2.1", "(a=15, p=2, {3}, (D3)_3)", r"(a=15, p=2, \{3\}, (D3)_3)"),
        ("T2.2", "(C18, p=3, {2}, (dD)_3)", r"(\mathcal{C}18, p=3, \{2\}, (dD)_3)"),
        ("T2.3", "(C18, p=3, {2}, (d^2D)_3)", r"(\mathcal{C}18, p=3, \{2\}, (d^2D)_3)"),
    ]
    for k, (ident, label, latex) in enumerate(table2, start=1):
        iso = cyclic_product([2, 3])
        s = _pic(iso.diagonal_endo([1, 1]))
        rows.append(FppDescriptor(
            ident, label, latex, 2, k, "C3", iso.group, (s,), (s,), ("C6",), True,
            _names(iso, {"t2": [1, 0], "t3": [0, 1]}),
            ("pi1(X/C3) = C6 is recorded from the table; the coinvariant comparison does not apply since 3 divides |H1|",)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _registry() -> Tuple[FppDescriptor, ...]:
    return _build()


def registry() -> List[FppDescriptor]:
    return list(_registry())


def normalize_label(label: str) -> str:
    s = label.replace("$", "")
    s = s.replace(r"\mathcal{C}", "C").replace(r"\emptyset", "∅").replace(r"\{", "{").replace(r"\}", "}")
    # braces only group in TeX, so drop them along with spacing and subscripts
    return re.sub(r"[\s_{}]", "", s)


def lookup(label: str, rows: Optional[Sequence[FppDescriptor]] = None) -> FppDescriptor:
    """Find a registry row by id (``T1.7``) or by its label in either notation."""
    rows = registry() if rows is None else rows
    key = normalize_label(label)
    for d in rows:
        if label == d.id or key in (normalize_label(d.label), normalize_label(d.latex_label)):
            return d
    raise UnknownSurface(label)


def registry_to_json(rows: Optional[Sequence[FppDescriptor]] = None) -> str:
    rows = registry() if rows is None else rows
    return json.dumps([d.to_json() for d in rows], indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def registry_from_json(text: str) -> List[FppDescriptor]:
    return [FppDescriptor.from_json(d) for d in json.loads(text)]


@dataclass
class ConsistencyResult:
    id: str
    subgroup: int
    quotient_pi1: str
    coinvariant_order: int
    abelianization_order: int
    relation: str          # "equal" or "divides"
    ok: bool


def check_consistency(d: FppDescriptor) -> List[ConsistencyResult]:
    """Compare coinvariant orders with the listed quotient fundamental groups.

    Without 3-torsion the coinvariants equal ``H1(X/C3)``; with 3-torsion
    only the surjection ``H1_G -> H1(X/G)`` is available, so the check is
    that the abelianization order divides the coinvariant order.
    """
    out = []
    exact = math.gcd(d.h1.order, 3) == 1
    for i, (g, q) in enumerate(zip(d.subgroup_generators, d.quotient_pi1)):
        c = coinvariants(d.h1, g.torsion_action).order
        a = abelianization_order(q)
        ok = (c == a) if exact else (c % a == 0)
        out.append(ConsistencyResult(d.id, i, q, c, a, "equal" if exact else "divides", ok))
    return out


def check_descriptor_invariants(d: FppDescriptor) -> List[str]:
    """Structural problems with a descriptor; empty when it is sound."""
    problems = []
    for g in d.aut_generators:
        if g.order() != 3:
            problems.append(f"generator of order {g.order()}, expected 3")
        if not g.fixes_canonical_class():
            problems.append("generator moves K_X")
    if d.aut_type == "C3xC3":
        if len(d.subgroup_generators) != 4:
            problems.append("C3xC3 needs exactly 4 order-3 subgroups")
        if len(d.automorphisms()) != 9:
            problems.append("generators do not span a group of order 9")
        subs = {frozenset(generated_automorphisms([g])) for g in d.subgroup_generators}
        if len(subs) != 4:
            problems.append("listed order-3 subgroups are not distinct")
    elif d.aut_type == "C3" and len(d.subgroup_generators) != 1:
        problems.append("C3 has exactly one order-3 subgroup")
    if len(d.quotient_pi1) != len(d.subgroup_generators):
        problems.append("quotient_pi1 column does not match the subgroups")
    return problems
