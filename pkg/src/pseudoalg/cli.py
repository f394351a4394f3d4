"""Command-line interface: ``pseudoalg <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog
from .algebra import CheckReport, PseudoAlgebra, check_jacobi, check_skew, classify, derived_series
from .hopf import to_rat
from .io import AlgebraFile, ParseError, dumps, load
from .schemas import validate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return to_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"window must look like A..B, got {text!r}") from exc
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError("window lower bound exceeds upper bound")
    return lo_i, hi_i


def _params(pairs: Sequence[str] | None) -> dict[str, str]:
    out = {}
    for item in pairs or ():
        if "=" not in item:
            raise UsageError(f"parameter must look like name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _emit(obj: dict, as_json: bool, text: str) -> None:
    if as_json:
        validate(obj)
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(text)


def _tensor_terms(t) -> list[dict]:
    return [{"degrees": list(k), "coeff": str(c)} for k, c in t.items()]


def check_report_json(A: PseudoAlgebra, rep: CheckReport, mode: str, ok: bool) -> dict:
    return {
        "kind": "check",
        "name": A.name,
        "rank": A.rank,
        "mode": mode,
        "classification": classify(A, rep),
        "skew_pass": rep.skew_pass,
        "jacobi_pass": rep.jacobi_pass,
        "ok": ok,
        "failures": [
            {
                "kind": f.kind,
                "indices": list(f.indices),
                "component": f.component,
                "residual": _tensor_terms(f.residual),
            }
            for f in rep.failures
        ],
    }


def _load_algebra(path: str) -> PseudoAlgebra:
    return load(path).to_algebra()


# Commands


def cmd_check(args) -> int:
    A = _load_algebra(args.file)
    rep = check_skew(A).merge(check_jacobi(A))
    mode = "lie" if args.lie else "leibniz"
    ok = rep.ok if args.lie else rep.jacobi_pass
    lines = [f"{A.name}: rank {A.rank}, {classify(A, rep)}"]
    lines += [f"  {f.describe()}" for f in rep.failures]
    lines.append(f"{mode} check: {'PASS' if ok else 'FAIL'}")
    _emit(check_report_json(A, rep, mode, ok), args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog_list(args) -> int:
    fams = catalog.list_families()
    obj = {"kind": "catalog-list", "families": [f.summary() for f in fams]}
    text = "\n".join(
        f"{f.id:14s} rank {f.rank}  {f.label:16s} {', '.join(p.name for p in f.params) or '-'}" for f in fams
    )
    _emit(obj, args.json, text)
    return EXIT_OK


def cmd_catalog_build(args) -> int:
    A = catalog.build(args.id, _params(args.param), corrected=not args.printed)
    text = dumps(AlgebraFile.from_algebra(A, args.id))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_catalog_verify(args) -> int:
    rep = catalog.verify_all(args.draws, args.seed, corrected=not args.printed)
    obj = rep.to_json()
    lines = [f"{fid:14s} {'PASS' if ok else 'FAIL'}" for fid, ok in rep.by_family().items()]
    lines += [f"  {r['family']} draw {r['draw']}: {r.get('error') or r['class']}" for r in rep.failures()]
    text = "\n".join(lines)
    _emit(obj, args.json, text + f"\n{'all families pass' if rep.ok else 'some families fail'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_catalog_docs(args) -> int:
    text = catalog.families_markdown()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    from .io import format_tensor
    from .solver import cohomology

    rep = cohomology(args.variant, args.lam, args.kappa, args.degree)
    lines = [
        f"variant {rep.variant}, lambda {rep.lam}, kappa {rep.kappa}, degree bound {rep.degree_bound}",
        f"solutions {rep.solution_dim}, coboundaries {rep.coboundary_dim}, dim {rep.h2_dim}",
    ]
    lines += [f"  {format_tensor(t)}" for t in rep.basis]
    _emit(rep.to_json(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_annihilate(args) -> int:
    from .annihilation import CurrentTable, compare, window_jacobi

    if (args.file is None) == (args.family is None):
        raise UsageError("give either an algebra file or --family")
    params = _params(args.param)
    if args.family:
        A = catalog.build(args.family, params)
        fam = args.family
    else:
        A = _load_algebra(args.file)
        fam = A.name
    table = CurrentTable(A)
    obj = table.to_json(args.window, family=fam, params=params, rho=args.rho)
    status = EXIT_OK
    text = [f"{fam}: {len(obj['brackets'])} nonzero current brackets on window {args.window[0]}..{args.window[1]}"]
    if args.verify_jacobi:
        w = window_jacobi(A, args.rho, args.window, table=table, skew=classify(A) == "lie")
        obj["window_jacobi"] = w.to_json()
        text.append(f"window Jacobi over {w.triples} triples: {'PASS' if w.ok else 'FAIL'}")
        status = status if w.ok else EXIT_FAIL
    if args.compare:
        if not args.family:
            raise UsageError("--compare needs --family")
        c = compare(args.family, params, args.rho, args.window, algebra=A)
        obj["compare"] = c.to_json()
        text.append(f"printed closed form over {c.pairs} pairs: {'MATCH' if c.ok else 'MISMATCH'}")
        text += [f"  {m.describe()}" for m in c.mismatches[:10]]
        status = status if c.ok else EXIT_FAIL
    _emit(obj, args.json, "\n".join(text))
    return status


def cmd_lambda(args) -> int:
    from .lambda_form import pretty, to_lambda

    L = to_lambda(_load_algebra(args.file), args.sign_convention)
    _emit(L.to_json(), args.json, pretty(L, ascii=args.ascii))
    return EXIT_OK


def cmd_derived(args) -> int:
    A = _load_algebra(args.file)
    series = derived_series(A, args.max_steps)
    obj = {
        "kind": "derived",
        "name": A.name,
        "series": [{"rank": r, "is_zero": z} for r, z in series],
        "solvable": series[-1][1],
    }
    text = "\n".join(f"A^({n}): rank {r}{' (zero)' if z else ''}" for n, (r, z) in enumerate(series))
    _emit(obj, args.json, text)
    return EXIT_OK


DEFAULT_LAMBDA_GRID = "-3,-2,-1,-1/2,0,1/3,1/2,2/3,1,3/2,2,3"


def cmd_enumerate_mtype(args) -> int:
    from .io import format_tensor
    from .solver import enumerate_mtype

    grid = [to_rat(x) for x in args.lambda_grid.split(",") if x.strip()]
    rows = enumerate_mtype(args.m_max, args.degree, grid, args.kappa)
    obj = {
        "kind": "mtype",
        "m_max": args.m_max,
        "degree": args.degree,
        "kappa1": str(args.kappa),
        "rows": [
            {
                "m": r.m,
                "lambda1": str(r.lambda1),
                "solvable": r.solvable,
                "lambda2": None if r.lambda2 is None else str(r.lambda2),
                "basis": [format_tensor(t) for t in r.basis],
            }
            for r in rows
        ],
    }
    text = "\n".join(
        f"m={r.m} lambda1={r.lambda1}: "
        + (f"lambda2={r.lambda2}  {format_tensor(r.basis[0])}" if r.solvable else "none")
        for r in rows
    )
    _emit(obj, args.json, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pseudoalg", description="Lie and Leibniz pseudoalgebras over k[s].")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check skew-symmetry and Jacobi for a .pa file")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--lie", action="store_true", help="require skew-symmetry as well as Jacobi")
    g.add_argument("--leibniz", action="store_true", help="require only the Jacobi identity (default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", help="classified families")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    q = csub.add_parser("list")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_catalog_list)
    q = csub.add_parser("build")
    q.add_argument("id")
    q.add_argument("-p", "--param", action="append", metavar="NAME=VALUE")
    q.add_argument("-o", "--output")
    q.add_argument("--printed", action="store_true", help="use printed coefficients, skipping corrections")
    q.set_defaults(func=cmd_catalog_build)
    q = csub.add_parser("verify")
    q.add_argument("--draws", type=int, default=5)
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--printed", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_catalog_verify)
    q = csub.add_parser("docs", help="write the family reference page")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_catalog_docs)

    p = sub.add_parser("cohomology", help="second cohomology of a rank-two extension")
    p.add_argument("--variant", choices=("lie", "leibniz", "trivial"), required=True)
    p.add_argument("--lambda", dest="lam", type=_rat, required=True)
    p.add_argument("--kappa", type=_rat, required=True)
    p.add_argument("--degree", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("annihilate", help="annihilation algebra on a window of currents")
    p.add_argument("file", nargs="?")
    p.add_argument("--family")
    p.add_argument("-p", "--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--rho", type=_rat, required=True)
    p.add_argument("--window", type=_window, required=True, metavar="A..B")
    p.add_argument("--verify-jacobi", action="store_true")
    p.add_argument("--compare", action="store_true", help="compare with the printed closed form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("lambda", help="λ-bracket form of a .pa file")
    p.add_argument("file")
    p.add_argument("--sign-convention", choices=("internal", "paper-reverse"), default="internal")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("derived", help="derived series of a .pa file")
    p.add_argument("file")
    p.add_argument("--max-steps", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derived)

    p = sub.add_parser("enumerate-mtype", help="search for nonzero alpha'_m")
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--degree", type=int, default=12)
    p.add_argument("--lambda-grid", default=DEFAULT_LAMBDA_GRID)
    p.add_argument("--kappa", type=_rat, default=Fraction(0))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate_mtype)
    return ap


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--window -6..6" would otherwise be read as an unknown option.
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--window", "--lambda", "--kappa", "--rho") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, catalog.UnknownFamily, catalog.ParamDomainViolation, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except catalog.PaperFormulaFails as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
