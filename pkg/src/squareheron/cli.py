"""Command-line front end.

Every subcommand writes one JSON object per line on stdout (or TSV with
``--tsv``).  Exit status: 0 success, 1 mathematical domain error (details
as JSON on stderr), 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from math import gcd
from typing import Iterable

from . import genus3
from .corpus import default_corpus, verify_corpus
from .elliptic import ECPoint, inverse_map, point_record, point_to_triangle, positivity_condition
from .exact import ConsistencyError, DomainError, format_rational, parse_rational
from .families import (
    ParamRatio,
    coprime_pairs,
    isosceles_family,
    isosceles_triangle,
    primitive_family_triangle,
    theorem14_rq,
)
from .search import (
    SearchBounds,
    default_workers,
    find_points,
    p_partitions,
    scan_partitions,
    _sort_key,
)
from .triangle import classify


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._header: list[str] | None = None

    @staticmethod
    def _cell(v) -> str:
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, (list, tuple)):
            return ",".join(Emitter._cell(x) for x in v)
        if isinstance(v, dict):
            return json.dumps(v, separators=(",", ":"))
        return str(v)

    def emit(self, rec: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            if self._header is None:
                self._header = list(rec)
                self.out.write("\t".join(self._header) + "\n")
            self.out.write("\t".join(self._cell(rec.get(k)) for k in self._header) + "\n")
        self.out.flush()

    def emit_all(self, recs: Iterable[dict]) -> None:
        for rec in recs:
            self.emit(rec)


def _tri_record(t, **extra) -> dict:
    rec = t.to_record()
    rec.update(extra)
    return rec


def cmd_verify_triangle(args, em: Emitter) -> int:
    rec = classify(args.a, args.b, args.c).to_record()
    if not rec["heron"]:
        rec = {"a": args.a, "b": args.b, "c": args.c, "heron": False, "degenerate": rec["degenerate"]}
    em.emit(rec)
    return 0


def cmd_verify_corpus(args, em: Emitter) -> int:
    items = default_corpus()
    if args.item:
        items = [it for it in items if any(sel in it.name for sel in args.item)]
    report = verify_corpus(items)
    em.emit_all(r.to_record() for r in report.results)
    return 0 if report.passed else 1


def cmd_gen_family(args, em: Emitter) -> int:
    if args.k is not None:
        pairs = [ParamRatio.from_k(args.k)]
    else:
        pairs = list(coprime_pairs(args.m_max))
    for mn in pairs:
        t = primitive_family_triangle(mn)
        r, q = theorem14_rq(mn)
        em.emit(_tri_record(t, provenance=f"thm1.4 {mn.label()}", r=format_rational(r), q=format_rational(q)))
    return 0


def cmd_gen_isosceles(args, em: Emitter) -> int:
    if args.k is not None:
        em.emit(_tri_record(isosceles_triangle(args.k), provenance=f"thm1.5 {format_rational(args.k)}"))
        return 0
    if args.u is not None:
        if args.v is None:
            raise DomainError("--u needs --v")
        combos = [(args.u, args.v)]
    else:
        combos = [(u, v) for u in range(2, args.u_max + 1) for v in range(1, u) if gcd(u, v) == 1]
    variants = [args.variant] if args.variant else [1, 2]
    single = args.u is not None and len(variants) == 1
    for u, v in combos:
        for var in variants:
            try:
                t = isosceles_family(u, v, var)
            except DomainError:
                if single:
                    raise
                continue
            em.emit(_tri_record(t, provenance=f"ex2.8 v{var} {u},{v}"))
    return 0


def cmd_map_point(args, em: Emitter) -> int:
    p = ECPoint(args.x, args.y)
    r, q = inverse_map(args.k, p)
    rec = point_record(args.k, p)
    rec.update(r=format_rational(r), q=format_rational(q), positivity=positivity_condition(args.k, p))
    rec["triangle"] = point_to_triangle(args.k, p).to_record()
    em.emit(rec)
    return 0


def cmd_point_search(args, em: Emitter) -> int:
    pts = find_points(args.k, SearchBounds(height_bound=args.height), workers=args.workers)
    em.emit_all(point_record(args.k, p) for p in pts)
    return 0


def _read_checkpoint(path: str) -> set[tuple[int, int]]:
    done = set()
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 2:
                    done.add((int(parts[0]), int(parts[1])))
    return done


def cmd_enumerate(args, em: Emitter) -> int:
    bounds = SearchBounds(max_side=args.max_side)
    if bounds.max_side < 16:
        raise DomainError("max_side must be at least 16")
    parts = p_partitions(bounds.max_side, args.chunk)
    parts = [(lo, hi) for lo, hi in parts if lo >= args.p_min and (args.p_max is None or lo <= args.p_max)]
    if args.resume is None:
        found = []
        for _, tris in scan_partitions(bounds.max_side, parts, args.workers):
            found.extend(tris)
        found.sort(key=_sort_key)
        em.emit_all(t.to_record() for t in found)
        return 0
    # Resumable mode streams partition by partition and records each one.
    done = _read_checkpoint(args.resume)
    todo = [part for part in parts if part not in done]
    with open(args.resume, "a") as ck:
        for part, tris in scan_partitions(bounds.max_side, todo, args.workers):
            em.emit_all(t.to_record() for t in sorted(tris, key=_sort_key))
            ck.write(f"{part[0]} {part[1]}\n")
            ck.flush()
    return 0


_SYM_OPS = sorted(genus3.SYMMETRIES) + ["canonical"]


def cmd_symmetry(args, em: Emitter) -> int:
    sol = genus3.GenusThreeSolution(args.k, args.r, args.q)
    em.emit(dict(genus3.verification_report(sol), step="input"))
    for op in args.op or []:
        if op == "canonical":
            sol, chain = genus3.canonicalize(sol)
            em.emit(dict(genus3.verification_report(sol), step="canonical", chain=chain))
        else:
            sol = genus3.SYMMETRIES[op](sol)
            em.emit(dict(genus3.verification_report(sol), step=op))
    return 0


# Lets "-23/1421" be read as a value rather than an option.
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON lines (default)")
    g.add_argument("--tsv", dest="fmt", action="store_const", const="tsv", help="tab-separated values")
    fmt.set_defaults(fmt="json")

    parser = argparse.ArgumentParser(prog="squareheron", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-triangle", parents=[fmt], help="classify an integer triangle")
    for name in "abc":
        p.add_argument(name, type=_positive_int)
    p.set_defaults(func=cmd_verify_triangle)

    p = sub.add_parser("verify-corpus", parents=[fmt], help="check every published datum")
    p.add_argument("--item", action="append", help="only items whose name contains this text")
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("gen-family", parents=[fmt], help="parametric primitive two-square triangles")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=_rational)
    g.add_argument("--m-max", type=_positive_int)
    p.set_defaults(func=cmd_gen_family)

    p = sub.add_parser("gen-isosceles", parents=[fmt], help="isosceles triangles with square legs")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=_rational)
    g.add_argument("--u", type=_positive_int)
    g.add_argument("--u-max", type=_positive_int)
    p.add_argument("--v", type=_positive_int)
    p.add_argument("--variant", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_gen_isosceles)

    p = sub.add_parser("map-point", parents=[fmt], help="map a curve point to a triangle")
    p.add_argument("--k", type=_rational, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--y", type=_rational, required=True)
    p.set_defaults(func=cmd_map_point)

    workers = argparse.ArgumentParser(add_help=False)
    workers.add_argument("--workers", type=_positive_int, default=default_workers())

    p = sub.add_parser("point-search", parents=[fmt, workers], help="bounded rational point search")
    p.add_argument("--k", type=_rational, required=True)
    p.add_argument("--height", type=_positive_int, default=100)
    p.set_defaults(func=cmd_point_search)

    p = sub.add_parser("enumerate", parents=[fmt, workers], help="brute-force two-square Heron triangles")
    p.add_argument("--max-side", type=_positive_int, required=True)
    p.add_argument("--chunk", type=_positive_int, default=1, help="p values per partition")
    p.add_argument("--p-min", type=_positive_int, default=1)
    p.add_argument("--p-max", type=_positive_int)
    p.add_argument("--resume", metavar="FILE", help="checkpoint file of completed p ranges")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("symmetry", parents=[fmt], help="apply symmetry maps to a (k, r, q) triple")
    p.add_argument("--k", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--op", action="append", choices=_SYM_OPS)
    p.set_defaults(func=cmd_symmetry)
    for ap in [parser, *sub.choices.values()]:
        ap._negative_number_matcher = _NEGATIVE
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    em = Emitter(args.fmt, out)
    try:
        return args.func(args, em)
    except (DomainError, ConsistencyError) as exc:
        kind = "domain" if isinstance(exc, DomainError) else "consistency"
        err.write(json.dumps({"error": str(exc), "type": kind}) + "\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
