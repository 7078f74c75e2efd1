"""Command line interface producing reproducible JSON artifacts.

Subcommands: nf, gauss, map, verify, pbw, fixtures.  All output is UTF-8
JSON with sorted keys; identical configuration yields byte-identical bytes
(timing goes to stderr only).  Exit codes: 0 success, 1 verification
failure, 2 usage or shape error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .algebra import Algebra, Element, Signature
from .gauss import check_gauss, format_composition, gauss, parse_composition
from .morphisms import omega, psi, rho, zeta
from .pbw import FAMILIES, enumerate_pbw, independence_check, spanning_check
from .series import Series
from .verify import SUITE_NAMES, WrongShape, verify_all, verify_suite


class ParseError(Exception):
    """Malformed input file, expression, or composition."""


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(text, path=None):
    sys.stdout.write(text)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_mu(text):
    try:
        return parse_composition(text)
    except (AssertionError, ValueError) as exc:
        raise ParseError("bad composition %r: %s" % (text, exc))


def _parse_mn(text):
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m:
        raise ParseError("bad signature %r (want M,N)" % text)
    return int(m.group(1)), int(m.group(2))


def _parse_expr(text):
    m = re.fullmatch(r"t(\d+),(\d+)", text) or re.fullmatch(r"t(\d)(\d)", text)
    if not m:
        raise ParseError("bad expression %r (want tI,J or tIJ)" % text)
    return int(m.group(1)), int(m.group(2))


# -- subcommands -------------------------------------------------------------

def cmd_nf(args):
    M, N = _parse_mn(args.mn)
    alg = Algebra(Signature(M, N), args.order)
    if args.expr_file == "-":
        raw = sys.stdin.read()
        src = "<stdin>"
    else:
        try:
            with open(args.expr_file, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(str(exc))
        src = args.expr_file
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError("%s:%d:%d: %s" % (src, exc.lineno, exc.colno, exc.msg))
    try:
        if isinstance(data, list):
            x = alg.word([tuple(g) for g in data])
        else:
            x = Element.from_json(alg, data)
    except (KeyError, TypeError, ValueError, AssertionError) as exc:
        raise ParseError("%s: bad element data: %s" % (src, exc))
    _emit(dumps(x.to_json()), args.json)
    return 0


def cmd_gauss(args):
    mu = _parse_mu(args.mu)
    gd = gauss(mu, args.K, var=args.var, order=args.order)
    _emit(dumps(gd.to_json()), args.json)
    return 0


def cmd_map(args):
    M, N = _parse_mn(args.mn)
    src = Algebra(Signature(M, N), args.order)
    if args.name == "rho":
        mor = rho(src)
    elif args.name == "omega":
        mor = omega(src)
    elif args.name == "zeta":
        mor = zeta(src)
    else:
        mor = psi(src, args.shift)
    i, j = _parse_expr(args.expr)
    if not (1 <= i <= M + N and 1 <= j <= M + N):
        raise ParseError("expression index (%d,%d) outside 1..%d" % (i, j, M + N))
    image = mor.of_series(Series.gen(src, i, j, "u", args.K))
    obj = {"name": args.name, "mn": "%d,%d" % (M, N), "K": args.K,
           "expr": args.expr, "image": image.to_json()}
    if args.name == "psi":
        obj["shift"] = args.shift
    _emit(dumps(obj), args.json)
    return 0


def cmd_verify(args):
    mu = _parse_mu(args.mu)
    if args.suite == "all":
        reports = verify_all(mu, args.K, order=args.order, workers=args.workers)
        failed = sum(r.failed for r in reports)
        obj = {"suite": "all", "mu": format_composition(mu), "K": args.K,
               "order": args.order,
               "total": sum(r.total for r in reports),
               "passed": sum(r.total - r.failed for r in reports),
               "failed": failed,
               "reports": [r.to_json() for r in reports]}
    else:
        rep = verify_suite(args.suite, mu, args.K, order=args.order,
                           workers=args.workers)
        failed = rep.failed
        obj = rep.to_json()
    _emit(dumps(obj), args.json)
    return 1 if failed else 0


def cmd_pbw(args):
    mu = _parse_mu(args.mu)
    monos = enumerate_pbw(mu, args.deg, args.len, family=args.family)
    obj = {"mu": format_composition(mu), "K": args.K, "deg": args.deg,
           "len": args.len, "family": args.family, "check": args.check,
           "count": len(monos)}
    bad = False
    if args.check in ("rank", "both"):
        rep = independence_check(monos, mu, args.K, order=args.order)
        obj["rank"] = rep["rank"]
        obj["independent"] = rep["independent"]
        bad = bad or not rep["independent"]
    if args.check in ("span", "both"):
        sp = spanning_check(mu, args.deg, args.len, args.K, order=args.order)
        obj["targets"] = sp["targets"]
        obj["spanned"] = sp["spanned"]
        obj["span_failures"] = sp["span_failures"]
        bad = bad or not sp["ok"]
    _emit(dumps(obj), args.json)
    return 1 if bad else 0


def cmd_fixtures(args):
    out = args.out
    os.makedirs(out, exist_ok=True)
    written = []

    def put(name, obj):
        path = os.path.join(out, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(obj))
        written.append(name)

    alg11 = Algebra(Signature(1, 1))
    put("nf-word-2112.json", alg11.word([(2, 1, 1), (1, 2, 1)]).to_json())
    put("nf-empty.json", alg11.zero().to_json())
    put("gauss-1_1-K2.json", gauss(parse_composition("1|1"), 2).to_json())
    zmor = zeta(Algebra(Signature(1, 1)))
    put("map-zeta-1_1-t11-K2.json",
        zmor.of_series(Series.gen(zmor.src, 1, 1, "u", 2)).to_json())
    _, gfail = check_gauss(parse_composition("1|1"), 3)
    put("check-gauss-1_1-K3.json", {"mu": "1|1", "K": 3, "failures": gfail,
                                    "ok": not gfail})
    for mus, suite, K in (("1|1", "thm73", 3), ("1|1", "mn11", 3),
                          ("2|1", "levi", 2), ("1,1|1", "all", 2)):
        tag = mus.replace(",", "_").replace("|", "-")
        if suite == "all":
            reports = verify_all(parse_composition(mus), K, workers=1)
            obj = {"suite": "all", "mu": mus, "K": K, "order": "rij",
                   "total": sum(r.total for r in reports),
                   "passed": sum(r.total - r.failed for r in reports),
                   "failed": sum(r.failed for r in reports),
                   "reports": [r.to_json() for r in reports]}
        else:
            obj = verify_suite(suite, parse_composition(mus), K, workers=1).to_json()
        put("verify-%s-%s-K%d.json" % (suite, tag, K), obj)
    mu11 = parse_composition("1|1")
    monos = enumerate_pbw(mu11, 0, 1)
    rep = independence_check(monos, mu11, 1)
    sp = spanning_check(mu11, 0, 1, 1)
    put("pbw-1-1-deg0-len1.json",
        {"count": len(monos), "rank": rep["rank"],
         "span_failures": sp["span_failures"]})
    _emit(dumps({"dir": out, "written": sorted(written)}))
    return 0


# -- parser ------------------------------------------------------------------

def _add_common(sp, mu=False, mn=False, K=None):
    if mu:
        sp.add_argument("--mu", required=True, help="composition, e.g. 2,1|1")
    if mn:
        sp.add_argument("--mn", required=True, help="signature M,N, e.g. 1,1")
    if K is not None:
        sp.add_argument("-K", type=int, default=K, help="truncation order")
    sp.add_argument("--order", choices=("rij", "ijr"), default="rij",
                    help="monomial order")
    sp.add_argument("--json", metavar="PATH", default=None,
                    help="also write the JSON artifact to PATH")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="syk",
        description="Exact computations in the super Yangian of gl(M|N).")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("nf", help="normal form of an element read as JSON")
    sp.add_argument("expr_file", help="path to element JSON, or - for stdin")
    _add_common(sp, mn=True)
    sp.set_defaults(fn=cmd_nf)

    sp = sub.add_parser("gauss", help="Gauss decomposition data as JSON")
    _add_common(sp, mu=True, K=3)
    sp.add_argument("--var", default="u")
    sp.set_defaults(fn=cmd_gauss)

    sp = sub.add_parser("map", help="apply a morphism to a generator series")
    sp.add_argument("--name", required=True,
                    choices=("rho", "omega", "zeta", "psi"))
    sp.add_argument("--expr", required=True, help="generator series, e.g. t11")
    sp.add_argument("--shift", type=int, default=1, metavar="k",
                    help="shift size for psi")
    _add_common(sp, mn=True, K=3)
    sp.set_defaults(fn=cmd_map)

    sp = sub.add_parser("verify", help="run a relation verification suite")
    sp.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    sp.add_argument("--workers", type=int, default=None,
                    help="worker processes (default: SYK_WORKERS or 1)")
    _add_common(sp, mu=True, K=3)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("pbw", help="PBW window enumeration and certificates")
    sp.add_argument("--deg", type=int, required=True, help="loop degree cap")
    sp.add_argument("--len", type=int, required=True, help="word length cap")
    sp.add_argument("--family", choices=FAMILIES, default="full")
    sp.add_argument("--check", choices=("rank", "span", "both"), default="both")
    _add_common(sp, mu=True, K=3)
    sp.set_defaults(fn=cmd_pbw)

    sp = sub.add_parser("fixtures", help="regenerate the golden JSON corpus")
    sp.add_argument("--out", default="fixtures", help="output directory")
    sp.set_defaults(fn=cmd_fixtures)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.time()
    try:
        return args.fn(args)
    except (ParseError, WrongShape) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:
        print("internal error: %s: %s" % (type(exc).__name__, exc),
              file=sys.stderr)
        return 3
    finally:
        print("elapsed %.3fs" % (time.time() - t0), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
