"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 precondition or validation
failure, 3 enumeration limit exceeded.  Diagnostics and progress go to
stderr; stdout carries only results.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from dataclasses import asdict

from . import __version__
from .cache import FORMAT_VERSION, cached_extremal
from .constructions import (
    GenerationFailed,
    OutOfRange,
    base_tree,
    extremal_family,
    random_c4free_halin,
    wheel,
)
from .core import InvalidTree, bounded_faces, build_halin, validate
from .cycles import EdgeNotInGraph, find_cycle
from .enumeration import (
    CONJECTURE_FROM,
    DEFAULT_LIMIT,
    LimitExceeded,
    base_case_audit,
    conjecture_scan,
    count_halin_parallel,
    enumerate_halin,
    extremal_number,
)
from .reductions import PreconditionFailed, Rule, apply_rule, find_reduction
from .textio import FORMAT, ParseError, parse, serialize

log = logging.getLogger("halinturan")

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_LIMIT = 0, 1, 2, 3
TABULAR = {"audit", "conjecture"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cache-dir", default=None, help="overrides $HALIN_CACHE_DIR")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for extremal/enumerate")
    common.add_argument("--limit", type=int, default=None, help=f"enumeration cap (default {DEFAULT_LIMIT})")
    common.add_argument("--seed", type=int, default=0, help="seed for the random family")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="halin", description="Halin graph workbench for forbidden-cycle Turan numbers.")
    p.add_argument("--version", action="store_true", help="print tool and format versions")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("construct", parents=[common], help="emit a constructed graph")
    s.add_argument("--family", required=True, choices=["t16", "t17", "t18", "extremal", "wheel", "random"])
    s.add_argument("--n", type=int, default=None)

    s = sub.add_parser("check", parents=[common], help="C_k-freeness verdict")
    s.add_argument("--input", required=True)
    s.add_argument("--forbid", type=int, required=True)

    s = sub.add_parser("faces", parents=[common], help="bounded-face table")
    s.add_argument("--input", required=True)

    s = sub.add_parser("reduce", parents=[common], help="apply a reduction rule")
    s.add_argument("--input", required=True)
    s.add_argument("--rule", choices=[r.value for r in Rule], default=None)
    s.add_argument("--site", default=None, help="comma-separated vertex ids")

    s = sub.add_parser("extremal", parents=[common], help="exact ex_H(n, C_k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--forbid", type=int, required=True)
    s.add_argument("--witnesses", action="store_true")

    s = sub.add_parser("audit", parents=[common], help="per-longest-path audit of a base case")
    s.add_argument("--n", type=int, required=True, choices=[16, 17, 18])

    s = sub.add_parser("conjecture", parents=[common], help="C_k values against 8(n-1)/5")
    s.add_argument("--forbid", type=int, default=6)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)

    s = sub.add_parser("enumerate", parents=[common], help="all Halin graphs on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--forbid", type=int, default=None)
    s.add_argument("--count-only", action="store_true")
    return p


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse(text.strip())


def _emit(out, args, text: str | None = None, data=None, table: list[dict] | None = None):
    if args.format == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(table[0]) if table else [], lineterminator="\n")
        w.writeheader()
        w.writerows(table or [])
        out.write(buf.getvalue())
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def cmd_construct(args, out):
    fam, n = args.family, args.n
    if fam in ("t16", "t17", "t18"):
        g = build_halin(base_tree(fam).tree)
        if n is not None and n != g.n:
            raise UsageError(f"--family {fam} has {g.n} vertices, not {n}")
    elif n is None:
        raise UsageError(f"--family {fam} needs --n")
    elif fam == "wheel":
        g = wheel(n - 1)
    elif fam == "extremal":
        g = extremal_family(n)
    else:
        g = random_c4free_halin(n, args.seed)
    s = serialize(g)
    _emit(out, args, s, {"graph": s, "n": g.n, "edges": g.num_edges, "leaves": len(g.leaf_cycle)})


def cmd_check(args, out):
    g = _read_graph(args.input)
    if args.forbid < 3:
        raise UsageError("--forbid must be >= 3")
    w = find_cycle(g, args.forbid)
    if w is None:
        text = f"C{args.forbid}-free"
    else:
        text = f"contains C{args.forbid}: {' '.join(map(str, w))}"
    _emit(out, args, text, {
        "forbid": args.forbid, "contains": w is not None,
        "witness": list(w) if w else None, "n": g.n, "edges": g.num_edges,
    })


def cmd_faces(args, out):
    g = _read_graph(args.input)
    faces = bounded_faces(g)
    rows = [
        {"cycle_edge": list(f.cycle_edge), "size": f.size, "boundary": list(f.boundary)}
        for f in faces
    ]
    lines = ["u1 u2 size boundary"] + [
        f"{f.cycle_edge[0]} {f.cycle_edge[1]} {f.size} {' '.join(map(str, f.boundary))}" for f in faces
    ]
    _emit(out, args, "\n".join(lines), {"faces": rows})


def cmd_reduce(args, out):
    if args.rule is None and args.site is not None:
        raise UsageError("--site needs --rule")
    g = _read_graph(args.input)
    if args.rule is None:
        found = find_reduction(g)
        if found is None:
            raise PreconditionFailed("no applicable reduction site")
        rule, site = found
    else:
        rule = Rule(args.rule)
        if args.site is None:
            site = _first_site(g, rule)
            if site is None:
                raise PreconditionFailed(f"no applicable {rule.value} site")
        else:
            try:
                site = tuple(int(x) for x in args.site.split(","))
            except ValueError:
                raise UsageError(f"bad --site {args.site!r}")
            want = 3 if rule is Rule.SMOOTHING else 2
            if len(site) != want:
                raise UsageError(f"{rule.value} needs {want} site vertices")
    step = apply_rule(g, rule, site)
    res = serialize(step.result)
    report = {
        "rule": rule.value, "site": list(step.site),
        "before_edges": step.before_edges, "after_edges": step.after_edges,
        "edge_delta": step.edge_delta, "before_n": g.n, "after_n": step.result.n,
        "result": res,
    }
    text = "\n".join([res] + [f"# {k}: {v}" for k, v in report.items() if k != "result"])
    _emit(out, args, text, report)


def _first_site(g, rule):
    from .reductions import contraction_sites, leaf_removal_sites, smoothing_sites

    fn = {Rule.LEAF_REMOVAL: leaf_removal_sites, Rule.CONTRACTION: contraction_sites,
          Rule.SMOOTHING: smoothing_sites}[rule]
    return next(iter(fn(g)), None)


def _record_text(d: dict, witnesses: bool) -> str:
    lines = [
        f"n {d['n']}", f"forbid C{d['k']}",
        f"max_edges {d['max_edges'] if d['max_edges'] is not None else 'none'}",
        f"num_extremal {d['num_extremal']}", f"enumerated_total {d['enumerated_total']}",
    ]
    if witnesses:
        lines += [f"witness {w}" for w in d["witnesses"]]
    return "\n".join(lines)


def cmd_extremal(args, out):
    if args.forbid < 3:
        raise UsageError("--forbid must be >= 3")
    if args.n < 4:
        raise PreconditionFailed("Halin graphs have at least 4 vertices")

    def compute():
        log.info("enumerating n=%d for C%d", args.n, args.forbid)
        return extremal_number(args.n, args.forbid, limit=args.limit, jobs=args.jobs)

    from .enumeration import check_limit

    check_limit(args.n, args.limit)
    rec, hit = cached_extremal(args.n, args.forbid, compute, args.cache_dir)
    log.info("cache %s for n=%d k=%d", "hit" if hit else "miss", args.n, args.forbid)
    d = rec.to_dict()
    if not args.witnesses:
        d = {k: v for k, v in d.items() if k != "witnesses"}
    _emit(out, args, _record_text(rec.to_dict(), args.witnesses), d)


def cmd_audit(args, out):
    rep = base_case_audit(args.n)
    rows = rep.rows()
    lines = [f"n={rep.n}"] + [
        f"  k={r['k']}: {r['count']} graph(s), edge counts {r['edge_counts']}" for r in rows
    ] + [f"  [{'PASS' if c.passed else 'FAIL'}] {c.claim} (expected {c.expected})" for c in rep.checks]
    data = {
        "n": rep.n, "passed": rep.passed, "classes": rows,
        "checks": [asdict(c) for c in rep.checks],
    }
    table = [
        {"n": rep.n, "claim": c.claim, "expected": c.expected, "passed": c.passed} for c in rep.checks
    ] if args.format == "csv" else None
    _emit(out, args, "\n".join(lines), data, table)
    return EXIT_OK if rep.passed else EXIT_PRECONDITION


def cmd_conjecture(args, out):
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    if args.n_min < 4:
        raise UsageError("--n-min must be >= 4")
    from .enumeration import check_limit

    check_limit(args.n_max, args.limit)

    def extremal(n):
        return cached_extremal(
            n, args.forbid,
            lambda: extremal_number(n, args.forbid, limit=args.limit, jobs=args.jobs),
            args.cache_dir,
        )[0]

    rows = conjecture_scan(range(args.n_min, args.n_max + 1), args.forbid, extremal=extremal)
    table = [
        {
            "n": r.n, "value": "" if r.value is None else r.value, "bound": f"{r.bound:.1f}",
            "gap": "" if r.gap is None else f"{r.gap:.1f}", "exceeds": r.exceeds,
            "in_stated_range": r.in_stated_range,
        }
        for r in rows
    ]
    lines = ["n value bound gap note"] + [
        f"{t['n']} {t['value'] or 'none'} {t['bound']} {t['gap'] or '-'} "
        + ("EXCEEDS BOUND" if r.exceeds else "ok")
        + ("" if r.in_stated_range else f" (outside n >= {CONJECTURE_FROM})")
        for t, r in zip(table, rows)
    ]
    _emit(out, args, "\n".join(lines), {"forbid": args.forbid, "rows": [asdict(r) for r in rows]}, table)


def cmd_enumerate(args, out):
    if args.count_only and args.forbid is None:
        c = count_halin_parallel(args.n, args.jobs, args.limit)
        _emit(out, args, str(c), {"n": args.n, "count": c})
        return
    graphs = enumerate_halin(args.n, limit=args.limit, forbid=args.forbid)
    if args.count_only:
        c = sum(1 for _ in graphs)
        _emit(out, args, str(c), {"n": args.n, "forbid": args.forbid, "count": c})
        return
    codes = [serialize(g) for g in graphs]
    _emit(out, args, "\n".join(codes) if codes else "", {"n": args.n, "forbid": args.forbid, "graphs": codes})


COMMANDS = {
    "construct": cmd_construct, "check": cmd_check, "faces": cmd_faces, "reduce": cmd_reduce,
    "extremal": cmd_extremal, "audit": cmd_audit, "conjecture": cmd_conjecture,
    "enumerate": cmd_enumerate,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.version:
            out.write(f"halinturan {__version__} ({FORMAT} text, cache format {FORMAT_VERSION})\n")
            return EXIT_OK
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.format == "csv" and args.command not in TABULAR:
            raise UsageError(f"--format csv is only available for {', '.join(sorted(TABULAR))}")
        handler = logging.StreamHandler(err)
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        log.handlers[:] = [handler]
        log.setLevel(logging.INFO if args.verbose else logging.WARNING)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore" if not args.verbose else "default")
            rc = COMMANDS[args.command](args, out)
        return EXIT_OK if rc is None else rc
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except LimitExceeded as e:
        err.write(f"limit exceeded: {e}\n")
        return EXIT_LIMIT
    except (ParseError, InvalidTree, PreconditionFailed, OutOfRange, EdgeNotInGraph,
            GenerationFailed, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_PRECONDITION
    except OSError as e:
        err.write(f"error: {e}\n")
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
