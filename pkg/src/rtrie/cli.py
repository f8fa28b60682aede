"""Command-line front end.

One subcommand per invocation; commands that need a tree build it in-process
from a newline-delimited byte corpus (there is no on-disk tree format).
stdout carries data, stderr carries diagnostics.  Exit codes: 0 success
(query: found), 1 not-found or I/O failure, 2 usage error or failed
verification.

The stats and bench reports can additionally write per-row CSV and a PNG
figure next to the primary output (--csv / --plot).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .core import DEFAULT_R, NIL, RTrie
from .stats import ORDERS, Workload, bench_run, profile

DEFAULT_SEED = 42

_TEXT, _JSON = "text", "json"


def _decode(b: bytes) -> str:
    return b.decode("utf-8", "surrogateescape")


def load_corpus(path: str) -> tuple[list[bytes], int]:
    """Read newline-delimited byte strings; returns (lines, empty count).

    A trailing CR is stripped from each line so CRLF corpora work; empty
    lines are counted and skipped, never stored.
    """
    with open(path, "rb") as f:
        data = f.read()
    raw = data.split(b"\n")
    if raw and raw[-1] == b"":
        raw.pop()
    lines: list[bytes] = []
    empties = 0
    for ln in raw:
        if ln.endswith(b"\r"):
            ln = ln[:-1]
        if ln:
            lines.append(ln)
        else:
            empties += 1
    return lines, empties


def build_tree(path: str, seed: int, r: int) -> tuple[RTrie, dict]:
    lines, empties = load_corpus(path)
    t = RTrie(r=r, seed=seed)
    dups = 0
    for s in lines:
        if not t.insert(s):
            dups += 1
    summary = {"n": t.count, "duplicates": dups, "empty_lines": empties}
    return t, summary


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _report(args, command: str, seed: int, r: int, data: dict,
            text_lines: list[str]) -> None:
    if args.format == _JSON:
        payload = {"schema": 1, "command": command, "seed": seed, "r": r}
        payload.update(data)
        _emit_json(payload)
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _char_label(c: int) -> str:
    if 0x21 <= c <= 0x7E and c not in (0x22, 0x5C):  # printable, not " or \
        return chr(c)
    return f"0x{c:02x}"


def render_dot(t: RTrie) -> str:
    """Serialize the tree as a DOT digraph, node ids in preorder.

    Terminal nodes get a double border; edges carry L/M/R labels.  Output is
    deterministic for a given shape, so equal trees give equal bytes.
    """
    out = ["digraph rtrie {", "  node [shape=box];"]
    order: list = []
    ids: dict[int, int] = {}
    if t.root is not NIL:
        stack = [t.root]
        while stack:
            x = stack.pop()
            ids[id(x)] = len(order)
            order.append(x)
            if x.right is not NIL:
                stack.append(x.right)
            if x.mid is not NIL:
                stack.append(x.mid)
            if x.left is not NIL:
                stack.append(x.left)
    for i, x in enumerate(order):
        label = f"{_char_label(x.char)} / {x.prio} / {x.str_prio}"
        extra = ", peripheries=2" if x.str_prio > 0 else ""
        out.append(f'  n{i} [label="{label}"{extra}];')
    for i, x in enumerate(order):
        for tag, child in (("L", x.left), ("M", x.mid), ("R", x.right)):
            if child is not NIL:
                out.append(f'  n{i} -> n{ids[id(child)]} [label="{tag}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _write_profile_csv(prof, path: str) -> None:
    with open(path, "w", encoding="utf-8", errors="surrogateescape", newline="") as f:
        w = csv.writer(f)
        w.writerow(["key", "length", "sidesteps", "depth"])
        for row in prof.rows:
            w.writerow([_decode(row.key), row.length, row.sidesteps, row.depth])


def _write_bench_csv(report, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f)
        w.writerow(["phase", "ops", "seconds", "ops_per_sec"])
        for p in report.phases:
            w.writerow([p.name, p.ops, f"{p.seconds:.6f}", f"{p.ops_per_sec:.1f}"])


# command handlers; each returns the process exit code

def cmd_build(args, seed, r) -> int:
    t, summary = build_tree(args.input, seed, r)
    if summary["empty_lines"]:
        print(f"warning: skipped {summary['empty_lines']} empty lines", file=sys.stderr)
    if t.count == 0:
        print("warning: corpus contained no strings", file=sys.stderr)
    summary["input"] = args.input
    _report(args, "build", seed, r, summary, [
        f"built {summary['n']} strings from {args.input} "
        f"({summary['duplicates']} duplicates, {summary['empty_lines']} empty lines skipped) "
        f"[seed={seed} r={r}]",
    ])
    return 0


def cmd_query(args, seed, r) -> int:
    t, _ = build_tree(args.input, seed, r)
    found = t.contains(args.query)
    _report(args, "query", seed, r,
            {"query": args.query, "found": found},
            ["found" if found else "not found"])
    return 0 if found else 1


def cmd_prefix(args, seed, r) -> int:
    t, _ = build_tree(args.input, seed, r)
    matches = [_decode(m) for m in t.prefix_iter(args.prefix)]
    _report(args, "prefix", seed, r,
            {"prefix": args.prefix, "count": len(matches), "matches": matches},
            matches)
    return 0


def cmd_verify(args, seed, r) -> int:
    t, _ = build_tree(args.input, seed, r)
    violations = t.check_invariants()
    ok = not violations
    _report(args, "verify", seed, r,
            {"n": t.count, "ok": ok, "violations": [str(v) for v in violations]},
            [f"ok: all invariants hold (n={t.count}) [seed={seed} r={r}]"] if ok
            else [str(v) for v in violations])
    return 0 if ok else 2


def cmd_stats(args, seed, r) -> int:
    t, _ = build_tree(args.input, seed, r)
    members = list(t.prefix_iter())
    prof = profile(t, members)
    data = prof.to_dict()
    if args.csv:
        _write_profile_csv(prof, args.csv)
        data["csv"] = args.csv
    if args.plot:
        from .plots import render_profile_figure
        render_profile_figure(prof, args.plot)
        data["plot"] = args.plot
    lines = [f"n: {data['n']}",
             f"max_sidesteps: {data['max_sidesteps']}",
             f"mean_sidesteps: {data['mean_sidesteps']:.4f}",
             f"max_depth: {data['max_depth']}",
             f"mean_depth: {data['mean_depth']:.4f}",
             f"seed: {seed}",
             f"r: {r}"]
    if args.csv:
        lines.append(f"csv: {args.csv}")
    if args.plot:
        lines.append(f"plot: {args.plot}")
    _report(args, "stats", seed, r, data, lines)
    return 0


def cmd_bench(args, seed, r) -> int:
    w = Workload(alphabet_size=args.alpha, length_min=args.len_min,
                 length_max=args.len_max, count=args.count,
                 order=args.order, seed=seed)
    report = bench_run(w, runs=args.runs, r=r)
    data = report.to_dict()
    data.update({"count": w.count, "alphabet_size": w.alphabet_size,
                 "length_min": w.length_min, "length_max": w.length_max,
                 "order": w.order})
    if args.csv:
        _write_bench_csv(report, args.csv)
        data["csv"] = args.csv
    if args.plot:
        from .plots import render_bench_figure
        render_bench_figure(report, args.plot)
        data["plot"] = args.plot
    lines = [f"workload: count={w.count} alphabet={w.alphabet_size} "
             f"len={w.length_min}..{w.length_max} order={w.order} "
             f"[seed={seed} r={r}]"]
    for p in report.phases:
        lines.append(f"{p.name}: {p.ops} ops in {p.seconds:.4f}s "
                     f"({p.ops_per_sec:.0f} ops/sec)")
    lines.append(f"insert rotations: {report.insert_rotations} "
                 f"(path sidesteps {report.insert_path_sidesteps}, "
                 f"bound {'ok' if report.insert_bound_ok else 'VIOLATED'})")
    lines.append(f"delete rotations: {report.delete_rotations} "
                 f"(path sidesteps {report.delete_path_sidesteps}, "
                 f"bound {'ok' if report.delete_bound_ok else 'VIOLATED'})")
    if args.csv:
        lines.append(f"csv: {args.csv}")
    if args.plot:
        lines.append(f"plot: {args.plot}")
    _report(args, "bench", seed, r, data, lines)
    return 0


def cmd_export_dot(args, seed, r) -> int:
    t, _ = build_tree(args.input, seed, r)
    dot = render_dot(t)
    if args.out:
        with open(args.out, "w", encoding="ascii") as f:
            f.write(dot)
        _report(args, "export_dot", seed, r,
                {"out": args.out, "nodes": dot.count(" [label=")},
                [f"wrote {args.out}"])
    else:
        sys.stdout.write(dot)
    return 0


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="priority PRNG seed (default: $RTRIE_SEED or 42)")
    common.add_argument("--r", type=int, default=DEFAULT_R, dest="r",
                        help="priority ceiling (default 2^31-1)")
    common.add_argument("--format", choices=(_TEXT, _JSON), default=_TEXT)

    corpus = argparse.ArgumentParser(add_help=False)
    corpus.add_argument("--input", required=True, metavar="PATH",
                        help="newline-delimited corpus file")

    p = argparse.ArgumentParser(prog="rtrie",
                                description="Randomized ternary search trie tool")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("build", parents=[common, corpus],
                   help="ingest a corpus and print a summary")

    q = sub.add_parser("query", parents=[common, corpus],
                       help="membership test (exit 0 found, 1 not found)")
    q.add_argument("--query", required=True, metavar="STR")

    pre = sub.add_parser("prefix", parents=[common, corpus],
                         help="list stored strings with a given prefix")
    pre.add_argument("--prefix", default="", metavar="STR",
                     help="prefix to match (empty lists everything)")

    sub.add_parser("verify", parents=[common, corpus],
                   help="run the invariant checker (exit 2 on violations)")

    st = sub.add_parser("stats", parents=[common, corpus],
                        help="search-path depth/sidestep profile")
    st.add_argument("--csv", metavar="PATH", help="write per-string rows as CSV")
    st.add_argument("--plot", metavar="PATH", help="write a histogram PNG")

    be = sub.add_parser("bench", parents=[common],
                        help="generate a workload and time the operations")
    be.add_argument("--count", type=int, default=1000)
    be.add_argument("--alpha", type=int, default=26, help="alphabet size")
    be.add_argument("--len-min", type=int, default=5)
    be.add_argument("--len-max", type=int, default=15)
    be.add_argument("--order", choices=ORDERS, default="random")
    be.add_argument("--runs", type=int, default=5)
    be.add_argument("--csv", metavar="PATH", help="write per-phase rows as CSV")
    be.add_argument("--plot", metavar="PATH", help="write a throughput PNG")

    dot = sub.add_parser("export-dot", parents=[common, corpus],
                         help="emit the tree shape as a DOT digraph")
    dot.add_argument("--out", metavar="PATH",
                     help="output file (default: stdout)")
    return p


_HANDLERS = {
    "build": cmd_build,
    "query": cmd_query,
    "prefix": cmd_prefix,
    "verify": cmd_verify,
    "stats": cmd_stats,
    "bench": cmd_bench,
    "export-dot": cmd_export_dot,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.seed is not None:
        seed = args.seed
    else:
        env = os.environ.get("RTRIE_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                print(f"error: RTRIE_SEED must be an integer, got {env!r}",
                      file=sys.stderr)
                return 2
        else:
            seed = DEFAULT_SEED
    if args.r < 1:
        print(f"error: --r must be >= 1, got {args.r}", file=sys.stderr)
        return 2
    if args.command == "query" and args.query == "":
        print("error: --query must be nonempty", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args, seed, args.r)
    except OSError as e:
        name = e.filename if e.filename else getattr(args, "input", "")
        print(f"error: {name}: {e.strerror or e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
