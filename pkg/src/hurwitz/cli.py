"""Command-line front end.

Every subcommand prints JSON on stdout (``--pretty`` switches to a text
table). Data are written as bracket groups, e.g. ``"[2,2,1],[2,3],[2,3]"``;
degree and genus are inferred, ``--degree``/``--genus`` only validate.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import formulas
from .cache import VERSION_TAG, open_cache
from .characters import frobenius_tuple_count
from .dessin import dessin_graph, to_dot
from .enumerate import EnumerationTooLarge, enumerate_strong
from .equivalence import weak_count
from .partitions import (BranchDatum, IncompatibleDatumError, MalformedDatumError,
                         genus_from_partitions, is_compatible, parse_partitions,
                         zieve_status)
from .scanner import ScanRefused, conjecture_report, scan_degree, write_jsonl

EXIT_OK = 0
EXIT_INCOMPATIBLE = 1
EXIT_PARSE = 2


def _emit(obj, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    if not pretty:
        out.write(json.dumps(obj) + "\n")
        return
    width = max((len(str(k)) for k in obj), default=0)
    for k, v in obj.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        out.write(f"{str(k).ljust(width)}  {v}\n")


def _error(message: str, code: int, pretty: bool) -> int:
    _emit({"error": message, "exit_code": code}, pretty)
    return code


def _load(text: str, args) -> BranchDatum:
    return BranchDatum.parse(text, degree=args.degree, genus=args.genus)


def _default_threads() -> int:
    if hasattr(os, "sched_getaffinity"):
        return len(os.sched_getaffinity(0))
    return os.cpu_count() or 1


def cmd_check(args) -> int:
    try:
        partitions = parse_partitions(args.datum)
        sums = {p.degree for p in partitions}
        if len(sums) != 1:
            raise MalformedDatumError("partitions have different sums")
    except MalformedDatumError as exc:
        return _error(str(exc), EXIT_PARSE, args.pretty)
    d = sums.pop()
    g = genus_from_partitions(partitions, d)
    report = {
        "datum": ",".join(str(p) for p in partitions),
        "degree": d,
        "n": len(partitions),
        "genus": int(g) if g.denominator == 1 else str(g),
    }
    try:
        datum = _load(args.datum, args)
    except MalformedDatumError as exc:
        report.update(compatible=False, reason=str(exc))
        _emit(report, args.pretty)
        return EXIT_INCOMPATIBLE
    except IncompatibleDatumError as exc:
        report.update(compatible=False, reason=str(exc))
        _emit(report, args.pretty)
        return EXIT_INCOMPATIBLE
    assert is_compatible(datum)
    report.update(compatible=True, genus=datum.cover_genus, zieve=zieve_status(datum).value)
    _emit(report, args.pretty)
    return EXIT_OK


def count_datum(datum: BranchDatum, mode: str, threads: int = 1,
                with_classes: bool = False) -> dict:
    """The JSON payload of ``count`` for one datum."""
    strong = enumerate_strong(datum, threads=threads)
    frob = frobenius_tuple_count(datum.partitions, datum.degree)
    out = {
        "degree": datum.degree,
        "genus": datum.cover_genus,
        "partitions": [list(p) for p in datum.partitions],
        "mode": mode,
    }
    if mode == "strong":
        reps = [(c.representative, c.aut_order) for c in strong.classes]
        out["count"] = strong.count
    else:
        weak = weak_count(datum, strong=strong)
        out["count"] = weak.nu
        out["strong_count"] = weak.strong_count
        out["mirror_count"] = weak.mirror_count
        reps = [(c, None) for c in weak.representatives]
    if with_classes:
        out["classes"] = [
            {"monodromy": [str(g) for g in c.perms],
             **({"aut_order": aut} if aut is not None else {})}
            for c, aut in reps]
    out["tuple_count"] = strong.transitive_tuple_count
    out["raw_tuple_count"] = strong.raw_tuple_count
    out["frobenius_count"] = frob
    out["frobenius_check"] = "pass" if frob == strong.raw_tuple_count else "fail"
    return out


def cmd_count(args) -> int:
    try:
        datum = _load(args.datum, args)
    except MalformedDatumError as exc:
        return _error(str(exc), EXIT_PARSE, args.pretty)
    except IncompatibleDatumError as exc:
        return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
    if datum.n != 3:
        return _error(f"counting needs 3 partitions, got {datum.n}", EXIT_INCOMPATIBLE,
                      args.pretty)
    cache = open_cache(args.cache)
    mode = args.mode + (":classes" if args.classes else "")
    t0 = time.perf_counter()
    result = cache.get(str(datum), mode) if cache is not None else None
    if result is None:
        try:
            result = count_datum(datum, args.mode, threads=args.threads,
                                 with_classes=args.classes)
        except EnumerationTooLarge as exc:
            return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
        if cache is not None:
            cache.put(str(datum), mode, result)
    if args.timing:
        result = dict(result, elapsed_ms=round(1000 * (time.perf_counter() - t0), 3))
    _emit(result, args.pretty)
    return EXIT_OK


def formula_value(family: str, k: int, pqr: Optional[Sequence[int]] = None,
                  p: Optional[int] = None) -> dict:
    out: dict = {"family": family, "k": k, "degree": 2 * k + 1}
    if family == "g0h0":
        out["value"] = formulas.nu_g0_h0(k)
    elif family == "g0h1":
        out["value"] = formulas.nu_g0_h1(k)
    elif family == "g0h2":
        if pqr is None or len(pqr) != 3:
            raise formulas.FormulaDomainError("g0h2 needs --pqr p,q,r")
        out["pqr"] = sorted(pqr, reverse=True)
        out["case"] = formulas.case_tag(k, *pqr).value
        out["value"] = formulas.nu_g0_h2(k, *pqr)
        out["claims"] = dict(zip(("I", "II"), formulas.claim_counts_g0_h2(k, *pqr)))
    elif family == "g1h2":
        out["value"] = formulas.nu_g1_h2(k)
    elif family == "g1h3":
        if p is None:
            raise formulas.FormulaDomainError("g1h3 needs --p")
        out["p"] = p
        out["value"] = formulas.nu_g1_h3(k, p)
        out["uncorrected"] = formulas.nu_g1_h3_uncorrected(k, p)
        out["claims"] = formulas.claim_counts_g1_h3(k, p)._asdict()
    elif family == "g2h4":
        out["value"] = formulas.nu_g2_h4(k)
        out["uncorrected"] = formulas.nu_g2_h4_uncorrected(k)
        asym, sym = formulas.nu_g2_decomposition(k)
        out["decomposition"] = {"asymmetric": asym, "symmetric": sym}
    else:
        raise formulas.FormulaDomainError(f"unknown family {family}")
    return out


def cmd_formula(args) -> int:
    pqr = None
    if args.pqr:
        try:
            pqr = [int(x) for x in args.pqr.split(",")]
        except ValueError:
            return _error(f"cannot parse --pqr {args.pqr!r}", EXIT_PARSE, args.pretty)
    try:
        result = formula_value(args.family, args.k, pqr, args.p)
    except formulas.FormulaDomainError as exc:
        return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
    _emit(result, args.pretty)
    return EXIT_OK


def cmd_scan(args) -> int:
    try:
        records = scan_degree(args.degree, genus_max=args.genus_max, deep=args.deep,
                              workers=args.threads, override=args.override)
    except (ScanRefused, ValueError) as exc:
        return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
    report = conjecture_report(records).to_json()
    if args.out:
        with open(args.out, "w") as fh:
            write_jsonl(records, fh, timing=not args.no_timing)
        _emit(report, args.pretty)
    else:
        write_jsonl(records, sys.stdout, timing=not args.no_timing)
        sys.stdout.write(json.dumps({"report": report}) + "\n")
    return EXIT_OK


def cmd_dessin(args) -> int:
    try:
        datum = _load(args.datum, args)
    except MalformedDatumError as exc:
        return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
    except IncompatibleDatumError as exc:
        return _error(str(exc), EXIT_INCOMPATIBLE, args.pretty)
    if datum.n != 3:
        return _error("dessins need 3 partitions", EXIT_INCOMPATIBLE, args.pretty)
    weak = weak_count(datum, threads=args.threads)
    graphs = [dessin_graph(c) for c in weak.representatives]
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        files = []
        for i, g in enumerate(graphs, 1):
            sidecar = outdir / f"dessin_{i}.json"
            sidecar.write_text(json.dumps(g, indent=1) + "\n")
            files.append(str(sidecar))
            if args.emit == "dot":
                dot = outdir / f"dessin_{i}.dot"
                dot.write_text(to_dot(g, f"dessin_{i}"))
                files.append(str(dot))
        _emit({"datum": str(datum), "nu": weak.nu, "files": files}, args.pretty)
        return EXIT_OK
    payload = {"datum": str(datum), "nu": weak.nu, "dessins": graphs}
    if args.emit == "dot":
        payload["dot"] = [to_dot(g, f"dessin_{i}") for i, g in enumerate(graphs, 1)]
    _emit(payload, args.pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker count (results do not depend on it)")
    common.add_argument("--cache", default=None,
                        help="JSON-lines result cache (default: $HURWITZ_CACHE)")

    parser = argparse.ArgumentParser(prog="hurwitz", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION_TAG}")
    sub = parser.add_subparsers(dest="command", required=True)

    def datum_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("datum", help='partitions, e.g. "[2,2,1],[2,3],[2,3]"')
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--genus", type=int, default=None)
        return p

    p = datum_cmd("check", "Riemann-Hurwitz compatibility, genus and Zieve status")
    p.set_defaults(func=cmd_check)

    p = datum_cmd("count", "strong or weak Hurwitz number")
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.add_argument("--classes", action="store_true", help="include class representatives")
    p.add_argument("--timing", action="store_true", help="add elapsed_ms")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formula", parents=[common], help="closed-form weak counts")
    p.add_argument("family", choices=("g0h0", "g0h1", "g0h2", "g1h2", "g1h3", "g2h4"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pqr", default=None, help="p,q,r for g0h2")
    p.add_argument("--p", type=int, default=None, help="larger part p for g1h3")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("scan", parents=[common], help="scan all compatible data of a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus-max", type=int, default=None)
    p.add_argument("--deep", action="store_true",
                   help="allow degree 11 on data with a [2,...,2,m] partition")
    p.add_argument("--override", action="store_true", help="lift the degree cap")
    p.add_argument("--out", default=None, help="JSON-lines output file")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms fields")
    p.set_defaults(func=cmd_scan)

    p = datum_cmd("dessin", "export one dessin per weak class")
    p.add_argument("--emit", choices=("dot", "json"), default="json")
    p.add_argument("--out", default=None, help="directory for dessin_<i>.{dot,json}")
    p.set_defaults(func=cmd_dessin)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
