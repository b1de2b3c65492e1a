"""Command-line entry point: ``hkdual <subcommand> [options]``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cohomology as coh
from . import kummer_aut as ka
from . import lattice_bb as lb
from . import llv
from . import quotient as qa
from .intlin import IntMatrix, cokernel, smith_normal_form
from .torus import (
    PolarizedTorus,
    TorusHom,
    dual_polarization,
    isogeny_kernel,
    polarization_type,
    standard_polarization,
)
from .verify import FAIL, FAMILIES, run_checks, summarize

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, IntMatrix):
        return x.tolist()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return str(x)


def dump_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, sort_keys=True, ensure_ascii=False)


def read_matrix(spec: str) -> IntMatrix:
    """A bracketed literal, or a path to a whitespace-separated text file."""
    if spec.lstrip().startswith("["):
        text = spec
    elif os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        raise UsageError(f"no such matrix file: {spec}")
    try:
        return IntMatrix.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse matrix: {exc}") from None


def _type_form(d1: int, d2: int) -> IntMatrix:
    if d1 < 1 or d2 < 1 or d2 % d1:
        raise UsageError(f"polarization type needs positive d1 dividing d2, got ({d1},{d2})")
    return standard_polarization(d1, d2)


def _config(args) -> ka.ModuliConfig:
    d1, d2 = args.d1, args.d2
    if args.n is None:
        if d2 is None:
            raise UsageError("give --n or both --d1 and --d2")
        n = d1 * d2 - 1
    else:
        n = args.n
        if d2 is None:
            d2 = (n + 1) // d1
    return ka.ModuliConfig(n, d1, d2, args.s)


# -- subcommands -------------------------------------------------------------


def cmd_snf(args) -> dict:
    A = read_matrix(args.matrix)
    snf = smith_normal_form(A)
    return {"command": "snf", "U": snf.U, "D": snf.D, "V": snf.V, "diagonal": list(snf.diagonal), "cokernel": str(cokernel(A)),
            "text": f"diagonal {list(snf.diagonal)}\ncokernel {cokernel(A)}"}


def cmd_polarization_type(args) -> dict:
    if args.form is not None:
        E = read_matrix(args.form)
    elif args.d2 is not None:
        E = _type_form(args.d1, args.d2)
    else:
        raise UsageError("give --form or --d1/--d2")
    t = polarization_type(PolarizedTorus(E))
    return {"command": "polarization-type", "type": list(t), "text": "(" + ",".join(map(str, t)) + ")"}


def cmd_kernel(args) -> dict:
    if args.matrix is not None:
        F = TorusHom(read_matrix(args.matrix))
    else:
        if args.d2 is None:
            raise UsageError("give --matrix or --d1/--d2")
        F = TorusHom(_type_form(args.d1, args.d2))
        if args.dual:
            F = dual_polarization(F, args.d1 * args.d2)
    K = isogeny_kernel(F)
    return {"command": "kernel", "matrix": F.F, "kernel": str(K), "order": K.order, "text": str(K)}


def cmd_galois(args) -> dict:
    if args.n is None and args.d2 is None:
        rows = []
        for cfg in ka.valid_configs(args.max_m):
            rows.append({"n": cfg.n, "d1": cfg.d1, "d2": cfg.d2, "s": cfg.s, "group": str(ka.translation_subgroup(cfg))})
        return {"command": "galois", "configs": rows, "text": "\n".join(f"{r['n']} {r['d1']} {r['d2']} {r['s']}: {r['group']}" for r in rows)}
    cfg = _config(args)
    G = ka.translation_subgroup(cfg)
    return {
        "command": "galois",
        "config": {"n": cfg.n, "d1": cfg.d1, "d2": cfg.d2, "s": cfg.s, "gcdCondition": cfg.satisfies_gcd},
        "group": str(G),
        "cokernelMinimalIsogeny": str(cokernel(ka.minimal_isogeny_matrix(cfg))),
        "autRel": str(ka.aut_rel(cfg)),
        "text": str(G),
    }


def cmd_factorization(args) -> dict:
    cfg = _config(args)
    ok = ka.verify_factorization(cfg)
    return {
        "command": "factorization",
        "M_phi": ka.minimal_isogeny_matrix(cfg),
        "M_psi": ka.factorization_partner_matrix(cfg),
        "holds": ok,
        "text": f"M_phi M_psi = {cfg.m} I_8: {ok}",
        "_exit": EXIT_OK if ok else EXIT_FAIL,
    }


KUM2_NAMED = {"h": [1, 0, 0, 0, 0, 0, 0], "x": [0, 1, 0, 0, 0, 0, 1]}


def cmd_fujiki(args) -> dict:
    if args.gram is not None:
        gram = read_matrix(args.gram)
        L = lb.BBLattice(gram, Fraction(args.c), args.half_dim)
        named: dict[str, list[int]] = {}
    elif args.lattice == "kum2":
        L = lb.kum2_lattice()
        named = dict(KUM2_NAMED)
    else:
        raise UsageError(f"unknown lattice {args.lattice!r}")
    for d in args.define or []:
        name, _, vec = d.partition("=")
        try:
            named[name.strip()] = [int(t) for t in vec.split(",")]
        except ValueError:
            raise UsageError(f"bad --define {d!r}") from None
    vecs = []
    for tok in args.vectors.split(";" if ";" in args.vectors else ","):
        tok = tok.strip()
        if tok not in named:
            raise UsageError(f"unknown vector {tok!r}; use --define {tok}=a,b,...")
        vecs.append(named[tok])
    value = lb.fujiki_product(L, vecs)
    return {"command": "fujiki", "value": str(value), "fujikiConstant": str(L.fujiki_constant), "text": str(value)}


def cmd_cup_l(args) -> dict:
    M = coh.cup_with_l_matrix(coh.ample_class(args.d1, args.d2))
    l = coh.ample_class(args.d1, args.d2)
    images = {f"e{i}*": repr(coh.wedge(l, coh.ExtClass.basis(i))) for i in range(1, 5)}
    return {"command": "cup-l", "matrix": M, "images": images, "text": str(M)}


def cmd_orbits(args) -> dict:
    invs, orbs = ka.involution_orbit_count(args.n)
    return {"command": "orbits", "involutions": invs, "orbits": orbs, "text": f"{invs} involutions, {orbs} orbits"}


def cmd_dual_kummer_report(args) -> dict:
    if args.ledger:
        ledger = qa.read_ledger(args.ledger)
        reports = {"ledger": qa.singularity_report(ledger).to_dict()}
    else:
        model = qa.kummer_translation_model()
        if args.write_ledger:
            with open(args.write_ledger, "w", encoding="utf-8") as fh:
                fh.write(qa.labelled_copy(model).dumps() + "\n")
        reports = {
            "declared": qa.singularity_report(qa.declared_dual_kummer_ledger()).to_dict(),
            "model": qa.singularity_report(model).to_dict(),
            "orbifoldEuler": str(qa.orbifold_euler(model, llv.betti_table(llv.kum2_decomposition()).euler)),
        }
    lines = []
    for k, r in reports.items():
        if isinstance(r, dict):
            lines.append(f"{k}: stepwise={r['stepwise']} burnside={r['burnside']} status={r['status']}")
        else:
            lines.append(f"{k}: {r}")
    return {"command": "dual-kummer-report", **reports, "text": "\n".join(lines)}


def cmd_llv(args) -> dict:
    if args.weight is not None:
        parts = [p.strip() for p in args.weight.split(",")]
        w = llv.HighestWeight.for_dimension(args.so, *parts) if args.so else llv.HighestWeight.of(args.series, *parts)
        d = llv.weyl_dim(w)
        return {"command": "llv", "algebra": w.algebra, "dimension": d, "text": f"{w.algebra} {tuple(map(str, w.weight))}: {d}"}
    if args.decomposition:
        dec = {"kum2": llv.kum2_decomposition, "dual-kum2": llv.dual_kum2_decomposition}[args.decomposition]()
        bt = llv.betti_table(dec)
        return {
            "command": "llv",
            "betti": list(bt.betti),
            "total": bt.total,
            "euler": bt.euler,
            "text": f"betti={list(bt.betti)} total={bt.total} euler={bt.euler}",
        }
    prof = llv.verbitsky_profile(args.b2, args.n)
    top = 4 * args.n
    return {"command": "llv", "profile": prof.as_list(top), "total": prof.total, "text": f"{prof.as_list(top)} total={prof.total}"}


def cmd_verify(args) -> dict:
    try:
        checks = run_checks(args.only)
    except KeyError:
        raise UsageError(f"unknown family {args.only!r}; choose from {', '.join(FAMILIES)}") from None
    summary = summarize(checks)
    width = max(len(c.name) for c in checks)
    lines = [f"{c.status:8} {c.name.ljust(width)}  expected {c.expected}  computed {c.computed}" for c in checks]
    lines.append(f"{summary['PASS']} passed, {summary['FAIL']} failed, {summary['FLAGGED']} flagged")
    return {
        "command": "verify-paper",
        "checks": [c.to_dict() for c in checks],
        "summary": summary,
        "text": "\n".join(lines),
        "_exit": EXIT_FAIL if summary[FAIL] else EXIT_OK,
    }


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hkdual", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def type_args(p, required=False):
        p.add_argument("--d1", type=int, default=1)
        p.add_argument("--d2", type=int, required=required)

    p = add("snf", cmd_snf, "Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True, help="file path or [[..],[..]] literal")

    p = add("polarization-type", cmd_polarization_type, "elementary divisors of an alternating form")
    p.add_argument("--form", help="file path or literal")
    type_args(p)

    p = add("kernel", cmd_kernel, "kernel of an isogeny")
    p.add_argument("--matrix")
    p.add_argument("--dual", action="store_true", help="use the dual polarization")
    type_args(p)

    for name, func, help in [
        ("galois", cmd_galois, "translation subgroup of a Kummer construction"),
        ("factorization", cmd_factorization, "check M_phi M_psi = (n+1) I"),
    ]:
        p = add(name, func, help)
        p.add_argument("--n", type=int)
        type_args(p)
        p.add_argument("--s", type=int, default=1)
        if name == "galois":
            p.add_argument("--max-m", type=int, default=12, help="range when no config is given")

    p = add("fujiki", cmd_fujiki, "intersection number of 2n classes")
    p.add_argument("--lattice", default="kum2")
    p.add_argument("--gram", help="Gram matrix file or literal (overrides --lattice)")
    p.add_argument("--c", default="1", help="Fujiki constant for --gram")
    p.add_argument("--half-dim", type=int, default=1)
    p.add_argument("--vectors", required=True, help="comma-separated names, e.g. h,h,x,x")
    p.add_argument("--define", action="append", help="name=a,b,c,... (repeatable)")

    p = add("cup-l", cmd_cup_l, "matrix of l cup - : H^1 -> H^3")
    type_args(p, required=True)

    p = add("orbits", cmd_orbits, "involutions and their conjugation orbits")
    p.add_argument("--n", type=int, default=2)

    p = add("dual-kummer-report", cmd_dual_kummer_report, "singularity and Euler accounting for X/G")
    p.add_argument("--ledger", help="read a ledger file instead of the built-in data")
    p.add_argument("--write-ledger", help="write the translation model as a ledger file")

    p = add("llv", cmd_llv, "LLV dimension bookkeeping")
    p.add_argument("--weight", help="comma-separated highest weight, e.g. 1/2,1/2,1/2,1/2")
    p.add_argument("--series", choices=["B", "D"], default="B")
    p.add_argument("--so", type=int, help="so(N); pads --weight with zeros")
    p.add_argument("--decomposition", choices=["kum2", "dual-kum2"])
    p.add_argument("--b2", type=int, default=7)
    p.add_argument("--n", type=int, default=2)

    p = add("verify-paper", cmd_verify, "run every reproducible identity")
    p.add_argument("--only", help=f"one family: {', '.join(FAMILIES)}")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (UsageError, ValueError, qa.LedgerError, OSError, json.JSONDecodeError) as exc:
        print(f"hkdual {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = report.pop("_exit", EXIT_OK)
    text = report.pop("text", None)
    if args.json:
        print(dump_json({"schemaVersion": SCHEMA_VERSION, **report}))
    else:
        print(text if text is not None else dump_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
