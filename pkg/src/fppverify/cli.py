"""Command-line front end: ``fpp-verify <command>``."""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from . import checks
from .geometry import QUOTIENT_PRESETS, hirzebruch_jung, preset_quotient, reider_filter
from .picard import DivisorClass, divisor
from .registry import FppDescriptor, UnknownSurface, lookup, registry_from_json, registry_to_json
from .simquot import (coinvariant_surjection_check, exact_sequence_II_check, h1,
                      load_action, load_complex)
from .vanishing import OutOfScope, format_class, run_vanishing


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _rows(path: Optional[str]) -> Optional[List[FppDescriptor]]:
    if path is None:
        return None
    with open(path) as fh:
        return registry_from_json(fh.read())


_TERM = re.compile(r"^(\d*)\s*\*?\s*([A-Za-z]\w*)$|^(\d+)$")


def parse_class(text: str, surface: FppDescriptor) -> DivisorClass:
    """Read ``L0 + t2 + 5t7`` (or ``2L0 - t3``) against the surface's named torsion."""
    D = divisor(surface.h1, 0)
    for sign, term in re.findall(r"([+-]?)\s*([^+-]+)", text.replace(" ", "")):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot read term {term!r}")
        if m.group(3):
            raise ValueError(f"bare number {term!r}; write it as a multiple of L0 or a torsion name")
        k = int(m.group(1) or 1) * (-1 if sign == "-" else 1)
        name = m.group(2)
        if name == "L0":
            D = D + divisor(surface.h1, k)
        elif name in dict(surface.torsion_names):
            D = D + DivisorClass(0, surface.named(name) * k)
        else:
            known = ", ".join(["L0"] + [n for n, _ in surface.torsion_names])
            raise ValueError(f"unknown generator {name!r}; this surface has {known}")
    return D


def cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    if only:
        unknown = [n for n in only if n not in checks.CHECKS]
        if unknown:
            raise checks.UnknownCheck(unknown[0], checks.suggest_checks(unknown[0]))
    run = checks.verify_all(args.seed, _rows(args.registry), only)
    if args.json:
        print(_dump(run.to_json(args.timings)))
    else:
        print(run.to_text(args.timings))
    return run.exit_code


def cmd_vanish(args) -> int:
    surface = lookup(args.label, _rows(args.registry))
    report = run_vanishing(surface)
    if args.explain:
        print(report.explain(parse_class(args.explain, surface)))
        return 0
    if args.json:
        print(_dump(report.to_json()))
        return 0
    f = lambda D: format_class(D, report.names)
    print(f"{surface.id}  {surface.label}  H1 = {surface.h1}")
    print(f"proved non-effective: {len(report.proved)}")
    for D in report.proved_noneffective:
        print("  " + report.proved[D].describe(report.names))
    print(f"undetermined: {', '.join(f(D) for D in report.undetermined) or 'none'}")
    for o in report.orbits:
        print(f"  orbit {{{', '.join(f(D) for D in o)}}}")
    print(f"at most {report.max_simultaneously_effective} effective at once")
    for n in report.notes:
        print(f"note: {n}")
    return 0


def cmd_resolve(args) -> int:
    g = hirzebruch_jung(args.n, args.q)
    if args.json:
        print(_dump(g.to_json()))
    else:
        print(f"1/{g.n}({1},{g.q}): chain {list(g.hj)}")
        print(f"self-intersections {list(g.self_intersections)}")
        print(f"discrepancies {[str(a) for a in g.discrepancies]}")
        print(f"K^2 change {g.k_squared_correction()}")
    return 0


def cmd_quotient(args) -> int:
    q = preset_quotient(args.group)
    if args.json:
        print(_dump(q.to_json()))
    else:
        sing = ", ".join(f"{c} x 1/{n}(1,{k})" for n, k, c in q.singularities)
        print(f"X/{args.group}: |G| = {q.group_order}, singular points {sing}")
        print(f"K^2 = {q.K2_resolution}, e = {q.euler_resolution}, chi = {q.chi}")
    return 0


def cmd_reider(args) -> int:
    cases = reider_filter(args.l2, args.square, args.degree, args.mode)
    if args.json:
        print(_dump([c.to_json() for c in cases]))
    elif not cases:
        print("no Reider case is realised: the map has the property")
    else:
        for c in cases:
            extra = f", K.D = {c.KD}, p_a = {c.p_a}" if c.KD is not None else ""
            print(f"{c.case_id}: D = {c.witness_m} x generator, D^2 = {c.D2}, D.L = {c.DL}{extra}")
    return 0


def cmd_homology(args) -> int:
    K = load_complex(args.complex)
    H = h1(K)
    out = {"complex": {"vertices": K.n_vertices, "edges": len(K.edges), "triangles": len(K.triangles),
                       "euler_characteristic": K.euler_characteristic()},
           "h1": H.to_json()}
    if args.action:
        A = load_action(K, args.action)
        out["group_order"] = len(A.elements())
        out["surjection"] = coinvariant_surjection_check(K, A).to_json()
        out["exact_sequence"] = exact_sequence_II_check(K, A).to_json()
    if args.json:
        print(_dump(out))
        return 0
    print(f"H1 = {H.describe()}  (chi = {out['complex']['euler_characteristic']})")
    if args.action:
        s, e = out["surjection"], out["exact_sequence"]
        print(f"|G| = {out['group_order']}, stabilisers generate: {s['stabilizers_generate']}")
        print(f"H1_G = {s['H_G']}, H1(K/G) = {s['H_quotient']}: {s['verdict']}, "
              f"cokernel {s['cokernel']}, kernel {s['kernel']}, subdivisions {s['subdivisions']}")
        print(f"(G/N)^ab = {e['G_mod_N_ab']}, sequence exact: {e['exact']}")
    return 0


def cmd_export(args) -> int:
    if args.what == "registry":
        text = registry_to_json(_rows(args.registry))
    else:
        text = _dump(checks.verify_all(args.seed, _rows(args.registry)).to_json())
    with open(args.path, "w") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")
    print(f"wrote {args.path}")
    return 0


def cmd_explain(args) -> int:
    print(checks.explain(args.check, args.seed, _rows(args.registry)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fpp-verify", description="Verification tools for fake projective planes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("verify", cmd_verify, "run every acceptance check")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--registry", help="registry JSON to check instead of the built-in one")
    sp.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte-determinism)")
    sp.add_argument("--only", metavar="NAMES", help="comma-separated check names")

    sp = add("vanish", cmd_vanish, "degree-one vanishing for one surface")
    sp.add_argument("label", help="surface id (e.g. T1.7) or label")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--explain", metavar="CLASS", help="proof chain for a class such as 'L0 + t2 + t7'")
    sp.add_argument("--registry")

    sp = add("resolve", cmd_resolve, "resolution chain of 1/n(1,q)")
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--json", action="store_true")

    sp = add("quotient", cmd_quotient, "invariants of a quotient X/G")
    sp.add_argument("group", choices=sorted(QUOTIENT_PRESETS))
    sp.add_argument("--json", action="store_true")

    sp = add("reider", cmd_reider, "Reider cases on a rank-one lattice")
    sp.add_argument("--l2", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True, help="L as a multiple of the generator")
    sp.add_argument("--square", type=int, default=1, help="self-intersection of the generator")
    sp.add_argument("--mode", choices=["bp", "sep"], default="sep")
    sp.add_argument("--json", action="store_true")

    sp = add("homology", cmd_homology, "H1 of a simplicial complex, optionally with a group action")
    sp.add_argument("complex", help="complex JSON file")
    sp.add_argument("--action", help="action JSON file")
    sp.add_argument("--json", action="store_true")

    sp = add("export", cmd_export, "write the registry or a verification report as JSON")
    sp.add_argument("what", choices=["registry", "report"])
    sp.add_argument("path")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--registry")

    sp = add("explain", cmd_explain, "print the derivation behind a check")
    sp.add_argument("check")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--registry")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except checks.UnknownCheck as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UnknownSurface, OutOfScope, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc.args[0] if isinstance(exc, KeyError) and exc.args else exc}", file=sys.stderr)
    except OSError as exc:
        # filesystem errors are shown as the OS reports them
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
