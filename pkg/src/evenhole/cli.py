"""Command-line entry point: ``evenhole <verb> ...``.

Exit codes: 0 pass, 1 violation or structure miss, 2 budget exhausted,
64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .coloring import color3
from .errors import BudgetExhausted, EvenHoleError
from .generators import GeneratorSpec, generate
from .graph import Graph, parse_graph, serialize_graph
from .holes import DEFAULT_BUDGET, INFINITE, check_membership, enumerate_holes, girth
from .report import EXIT_BUDGET, EXIT_FAIL, EXIT_PASS, SuiteReport, run_suite
from .search import exhaustive_search

EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_for(path: str, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    return "graph6" if Path(path).suffix in (".g6", ".graph6") else "edge-list"


def _load(path: str, fmt: str = "auto") -> Graph:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_graph(data, _fmt_for(path, fmt))
    except EvenHoleError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit_json(obj, dest: str | None) -> None:
    if dest is None:
        return
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=1, sort_keys=True) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _girth_str(g: float) -> str:
    return "infinite" if g == INFINITE else str(int(g))


# ---------------------------------------------------------------------------
# verbs


def cmd_analyze(args) -> int:
    g = _load(args.file, args.format)
    hs = enumerate_holes(g, 4, args.max_hole_len, args.budget)
    by_len = Counter(h.length for h in hs.holes)
    doc = {
        "n": g.n,
        "m": g.m,
        "girth": "infinite" if girth(g) == INFINITE else int(girth(g)),
        "connected": g.is_connected(),
        "hole_counts": {str(k): by_len[k] for k in sorted(by_len)},
        **hs.to_json(),
    }
    print(f"n={g.n} m={g.m} girth={_girth_str(girth(g))} connected={doc['connected']}")
    for k in sorted(by_len):
        print(f"holes of length {k}: {by_len[k]}")
    if hs.truncated:
        print("hole enumeration truncated by budget")
    _emit_json(doc, args.json)
    return EXIT_BUDGET if hs.truncated else EXIT_PASS


def cmd_membership(args) -> int:
    g = _load(args.file, args.format)
    try:
        rep = check_membership(g, args.ell, args.budget)
    except BudgetExhausted as exc:
        print(exc, file=sys.stderr)
        return EXIT_BUDGET
    print(f"girth={_girth_str(rep.girth)} in_H_{args.ell}={rep.in_H} in_G_{args.ell}={rep.in_G}")
    if rep.blocking_witness:
        w = rep.blocking_witness
        print(f"H_{args.ell} blocked by {w['kind']} of length {w['length']}: {w['vertices']}")
    _emit_json(rep.to_json(), args.json)
    return EXIT_PASS


def cmd_color(args) -> int:
    g = _load(args.file, args.format)
    res = color3(g, args.ell)
    for v, c in sorted(res.coloring.assignment.items()):
        print(v, c)
    if args.trace:
        _emit_json(res.to_json(), args.trace)
    if res.misses:
        print(f"structure miss: {len(res.misses)} residual block(s) coloured exactly", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


def _print_report(rep: SuiteReport) -> None:
    s = rep.summary()
    print(f"graphs={s['graphs']} in_H_{rep.ell}={s['in_H']} status={rep.status}")
    for lid, counts in s["verdicts"].items():
        parts = " ".join(f"{k}={v}" for k, v in counts.items())
        print(f"  {lid}: {parts}")
    for key in ("violations", "color_failures", "budget_exhausted"):
        if s[key]:
            print(f"  {key}: graphs {s[key]}")


def cmd_verify(args) -> int:
    graphs = [_load(p, args.format) for p in args.files]
    sources = [{"file": p} for p in args.files]
    meta = {"kind": "files", "files": list(args.files), "size": len(graphs)}
    try:
        rep = run_suite(graphs, args.ell, args.suite, args.budget, sources, meta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _print_report(rep)
    _emit_json(rep.dumps(), args.json)
    return rep.exit_code


def cmd_generate(args) -> int:
    try:
        spec = GeneratorSpec.parse(args.family, args.params, args.seed)
        res = generate(spec)
    except EvenHoleError as exc:
        raise UsageError(str(exc)) from exc
    fmt = _fmt_for(args.output, args.format)
    text = serialize_graph(res.graph, fmt)
    if fmt == "edge-list":
        header = f"# {json.dumps(spec.to_json(), sort_keys=True)}\n"
        if res.recipe:
            header += f"# recipe {json.dumps(res.recipe)}\n"
        text = header + text
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_PASS


def cmd_search(args) -> int:
    try:
        rep = exhaustive_search(args.n_max, args.girth, args.suite, args.ell, args.budget)
    except (ValueError, EvenHoleError) as exc:
        raise UsageError(str(exc)) from exc
    _print_report(rep)
    _emit_json(rep.dumps(), args.json)
    return rep.exit_code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="evenhole", description="Even-hole structure checks for small graphs.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, ell_required: bool | None = None, budget: bool = True):
        sp.add_argument("--format", choices=("auto", "edge-list", "graph6"), default="auto")
        if ell_required is not None:
            sp.add_argument("--ell", type=int, required=ell_required)
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    a = sub.add_parser("analyze", help="girth and holes")
    a.add_argument("file")
    a.add_argument("--max-hole-len", type=int, default=None)
    a.add_argument("--json", metavar="OUT")
    common(a)
    a.set_defaults(fn=cmd_analyze)

    m = sub.add_parser("membership", help="decide H_ell and G_ell membership")
    m.add_argument("file")
    m.add_argument("--json", metavar="OUT")
    common(m, ell_required=True)
    m.set_defaults(fn=cmd_membership)

    c = sub.add_parser("color", help="3-colour by decomposition")
    c.add_argument("file")
    c.add_argument("--trace", metavar="TREE_JSON")
    common(c, ell_required=False, budget=False)
    c.set_defaults(fn=cmd_color)

    v = sub.add_parser("verify", help="run a lemma suite on graph files")
    v.add_argument("files", nargs="+")
    v.add_argument("--suite", required=True)
    v.add_argument("--json", metavar="OUT")
    common(v, ell_required=True)
    v.set_defaults(fn=cmd_verify)

    g = sub.add_parser("generate", help="write a generated graph")
    g.add_argument("--family", required=True)
    g.add_argument("--params", required=True)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--format", choices=("auto", "edge-list", "graph6"), default="auto")
    g.set_defaults(fn=cmd_generate)

    s = sub.add_parser("search", help="exhaustive search over small graphs of given girth")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--girth", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--suite", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", metavar="OUT")
    s.set_defaults(fn=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "ell", None) is not None and args.ell < 2:
        print("evenhole: error: --ell must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"evenhole: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
