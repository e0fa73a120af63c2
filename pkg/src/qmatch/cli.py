"""Command line: expand, verify, scan, list.

Exit codes: 0 pass, 1 verification failure or counterexample, 2 usage or
parse error, 3 insufficient order or non-invertible leading coefficient.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .dsl import evaluate, parse
from .errors import InsufficientOrder, NonUnitLeading, ParseError, UnknownId
from .matching import DEFAULT_MIN_CHECKS, reciprocal_pair, scan
from .registry import ALIASES, REGISTRY, export_catalog, get_entry, list_ids, verify_all, verify_entry

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORDER = 0, 1, 2, 3
DEFAULT_N = 600


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", type=_positive, default=None, help=f"truncation order (default {DEFAULT_N})")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--min-checks", type=_positive, default=DEFAULT_MIN_CHECKS)
    common.add_argument("--jobs", type=_positive, default=1)

    p = _Parser(prog="qmatch", description="Exact q-series expansion and matching-coefficient checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", parents=[common], help="print coefficients of an expression")
    e.add_argument("expr")

    v = sub.add_parser("verify", parents=[common], help="check a catalog entry, an id prefix, or all")
    v.add_argument("target")
    v.add_argument("--auto-raise", action="store_true",
                   help="raise an explicit -N that is too small instead of exiting with 3")
    v.add_argument("--derived", action="store_true", help="include derived q -> -q twins")

    s = sub.add_parser("scan", parents=[common], help="search for relations between A and 1/A")
    s.add_argument("expr")
    s.add_argument("--max-mod", type=_positive, default=10)

    ls = sub.add_parser("list", parents=[common], help="list catalog ids")
    ls.add_argument("prefix", nargs="?", default=None)
    ls.add_argument("--derived", action="store_true")
    return p


# -- rendering -------------------------------------------------------------------


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render_expand(S, fmt) -> str:
    start, N = min(S.valuation, 0), S.order
    coeffs = [S[n] for n in range(start, N)]
    if fmt == "json":
        return json.dumps({"start": start, "order": N, "coefficients": coeffs})
    if fmt == "csv":
        return _csv(("n", "coefficient"), [(start + i, c) for i, c in enumerate(coeffs)])
    head = f"# from q^{start}\n" if start else ""
    return head + ",".join(str(c) for c in coeffs)


def _render_reports(reports, fmt) -> str:
    if fmt == "json":
        if len(reports) == 1:
            return json.dumps(reports[0].to_dict(), indent=1)
        return json.dumps({
            "passed": all(r.passed for r in reports),
            "total": len(reports),
            "failed": [r.id for r in reports if not r.passed],
            "entries": [r.to_dict() for r in reports],
        }, indent=1)
    if fmt == "csv":
        rows = []
        for r in reports:
            for d in r.details:
                rows.append((r.id, r.status, d["label"], d["passed"], d["checked_count"],
                             "" if d["first_failure_n"] is None else d["first_failure_n"],
                             d["order_used"], "yes" if d.get("counted", True) else "no"))
        return _csv(("id", "status", "check", "passed", "checked_count", "first_failure_n",
                     "order_used", "counted"), rows)
    lines = []
    for r in reports:
        lines.append(f"{r.id}: {r.status} ({r.report.checked_count} checks, order {r.report.order_used})")
        for d in r.details:
            tag = "ok" if d["passed"] else f"FAILS at n={d['first_failure_n']}"
            extra = "" if d.get("counted", True) else " [informational]"
            lines.append(f"  {d['label']}: {d['checked_count']} checks, {tag}{extra}")
        if r.erratum:
            lines.append(f"  note: {r.erratum}")
    if len(reports) > 1:
        bad = [r.id for r in reports if not r.passed]
        lines.append(f"{len(reports) - len(bad)}/{len(reports)} entries passed"
                     + (f"; not passed: {', '.join(bad)}" if bad else ""))
    return "\n".join(lines)


def _render_relations(rels, fmt) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rels])
    if fmt == "csv":
        return _csv(("cA", "aA", "rA", "cB", "aB", "rB"),
                    [(r.cA, r.aA, r.rA, r.cB, r.aB, r.rB) for r in rels])
    return "\n".join(str(r) for r in rels)


def _render_list(ids, fmt) -> str:
    if fmt == "json":
        entries = json.loads(export_catalog(include_derived=True))
        keep = set(ids)
        return json.dumps([e for e in entries if e["id"] in keep], indent=1, sort_keys=True)
    if fmt == "csv":
        return _csv(("id", "kind", "min_order", "statement"),
                    [(i, REGISTRY[i].kind, REGISTRY[i].min_order(), REGISTRY[i].statement) for i in ids])
    return "\n".join(f"{i}\t{REGISTRY[i].kind}\t{REGISTRY[i].statement}" for i in ids)


# -- commands ------------------------------------------------------------------------


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def cmd_expand(args) -> int:
    N = args.N or DEFAULT_N
    S = evaluate(parse(args.expr), N)
    print(_render_expand(S, args.format))
    return EXIT_OK


def _targets(target, derived):
    if target == "all":
        return None, list_ids(None, derived)
    if target in REGISTRY or target in ALIASES:
        return get_entry(target).id, None
    ids = list_ids(target, derived)
    if not ids:
        raise UnknownId(target)
    return None, ids


def cmd_verify(args) -> int:
    single, many = _targets(args.target, args.derived)
    if single is not None:
        auto = args.auto_raise or args.N is None
        r = verify_entry(single, args.N or DEFAULT_N, args.min_checks, auto_raise=auto)
        reports = [r]
    else:
        prefix = None if args.target == "all" else args.target
        reports = verify_all(prefix, args.N, args.jobs, args.min_checks, include_derived=args.derived).entries
    for r in reports:
        for w in r.warnings:
            _warn(f"{r.id}: {w}")
    print(_render_reports(reports, args.format))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_scan(args) -> int:
    N = args.N or DEFAULT_N
    if N <= args.min_checks:
        raise InsufficientOrder(f"order {N} leaves no room for {args.min_checks} checks",
                                checked=0, required=args.min_checks)
    top = (N - 1) // args.min_checks
    if top < args.max_mod:
        _warn(f"moduli above {top} get fewer than {args.min_checks} checks at order {N} and are skipped")
    A, B = reciprocal_pair(parse(args.expr), N)
    rels = scan(A, B, args.max_mod, args.min_checks, args.jobs)
    out = _render_relations(rels, args.format)
    if out:
        print(out)
    return EXIT_OK


def cmd_list(args) -> int:
    print(_render_list(list_ids(args.prefix, args.derived), args.format))
    return EXIT_OK


COMMANDS = {"expand": cmd_expand, "verify": cmd_verify, "scan": cmd_scan, "list": cmd_list}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownId as exc:
        print(f"unknown target: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientOrder as exc:
        print(f"insufficient order: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except NonUnitLeading as exc:
        print(f"not invertible over the integers: {exc}", file=sys.stderr)
        return EXIT_ORDER
