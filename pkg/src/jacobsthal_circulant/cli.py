"""Command-line entry point: ``jcirc <command> [options]``.

Exit status is 0 on success, 1 when ``verify`` finds a failing claim and
2 for usage errors (including an order ``n`` below a command's minimum).
"""

from __future__ import annotations

import argparse
import json
import sys

from .circulant import complex_to_json, eigenvalues_dft
from .exact_core import det_bareiss, rational_to_json
from .forms import eigen
from .forms.determinants import build_sequence_circulant, det_closed, sequence_dense
from .forms.inverses import inverse_closed
from .forms.report import verify_all
from .sequences import SequenceKind, term

KIND_CHOICES = ("jacobsthal", "jacobsthal-lucas", "both")

# smallest order each command accepts
MIN_ORDER = {"seq": 0, "build": 3, "det": 3, "invert": 3, "eigs": 5, "verify": 3, "bench": 3}
DEFAULT_RANGE = {"seq": "0..10", "verify": "3..10", "bench": "4..64"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    if ".." in text:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _kinds(choice: str) -> list[SequenceKind]:
    if choice == "both":
        return [SequenceKind.JACOBSTHAL, SequenceKind.JACOBSTHAL_LUCAS]
    return [SequenceKind(choice)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jcirc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=KIND_CHOICES, default="both")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    order = common.add_mutually_exclusive_group()
    order.add_argument("--n", type=int, metavar="N")
    order.add_argument("--range", type=parse_range, metavar="A..B", dest="n_range")

    sub.add_parser("seq", parents=[common], help="sequence terms (--n N prints indices 0..N)")
    sub.add_parser("build", parents=[common], help="the sequence circulant and its dense form")
    sub.add_parser("det", parents=[common], help="closed-form and elimination determinants")
    sub.add_parser("invert", parents=[common], help="closed-form inverse first row")
    eigs = sub.add_parser("eigs", parents=[common], help="DFT and closed-form eigenvalues")
    eigs.add_argument("--tol", type=float, default=1e-6, help="relative agreement tolerance")
    verify = sub.add_parser("verify", parents=[common], help="closed forms against oracles")
    verify.add_argument("--workers", type=int, default=1)
    bench = sub.add_parser("bench", parents=[common], help="timing CSV, closed forms vs elimination")
    bench.add_argument("--repeat", type=int, default=3)
    bench.add_argument("--step", type=int, default=4)
    bench.add_argument("--methods", default="det_closed,det_bareiss,inverse_closed,invert_exact")
    return parser


def _orders(args) -> list[int]:
    cmd = args.command
    if args.n is not None:
        ns = list(range(0, args.n + 1)) if cmd == "seq" else [args.n]
    elif args.n_range is not None:
        ns = list(args.n_range)
    elif cmd in DEFAULT_RANGE:
        ns = list(parse_range(DEFAULT_RANGE[cmd]))
    else:
        raise UsageError(f"{cmd} needs --n N or --range A..B")
    if cmd == "bench" and args.n is None and args.step > 1:
        ns = sorted(set(ns[:: args.step]) | {ns[-1]})
    low = MIN_ORDER[cmd]
    bad = [n for n in ns if n < low]
    if bad:
        what = "index" if cmd == "seq" else "order"
        raise UsageError(f"{cmd}: {what} n >= {low} required, got n = {bad[0]}")
    return ns


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


def cmd_seq(args, kinds, ns):
    if args.format == "json":
        return json.dumps({k.value: {str(i): str(term(k, i)) for i in ns} for k in kinds}, indent=2) + "\n"
    return _table([[i] + [term(k, i) for k in kinds] for i in ns], ["k"] + [k.value for k in kinds])


def cmd_build(args, kinds, ns):
    items = [(k, n, build_sequence_circulant(k, n)) for k in kinds for n in ns]
    if args.format == "json":
        payload = [{"kind": k.value, "circulant": c.to_json(), "dense": c.to_dense().to_json()} for k, n, c in items]
        return json.dumps(payload, indent=2) + "\n"
    out = []
    for k, n, c in items:
        out.append(f"{k.value} n={n}: circ({', '.join(str(v) for v in c.first_row)})")
        dense = c.to_dense()
        out.extend("  " + " ".join(str(v).rjust(6) for v in dense.row(i)) for i in range(n))
    return "\n".join(out) + "\n"


def cmd_det(args, kinds, ns):
    rows = []
    for k in kinds:
        for n in ns:
            closed = det_closed(k, n)
            oracle = det_bareiss(sequence_dense(k, n))
            rows.append((k, n, closed, oracle, closed == oracle))
    if args.format == "json":
        payload = [
            {"kind": k.value, "n": n, "closed_form": str(c), "oracle": rational_to_json(o), "match": m}
            for k, n, c, o, m in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    return _table(
        [[k.value, n, c, o, str(m).lower()] for k, n, c, o, m in rows],
        ["kind", "n", "closed_form", "oracle", "match"],
    )


def cmd_invert(args, kinds, ns):
    results = [(k, n, inverse_closed(k, n)) for k in kinds for n in ns]
    if args.format == "json":
        payload = [
            {
                "kind": k.value,
                "n": n,
                "circulant": inv.circulant.to_json(),
                "labels": list(inv.labels),
                "validated": inv.validated,
            }
            for k, n, inv in results
        ]
        return json.dumps(payload, indent=2) + "\n"
    out = []
    for k, n, inv in results:
        state = {None: "not checked", True: "matches elimination", False: "MISMATCH"}[inv.validated]
        out.append(f"{k.value} n={n} ({state})")
        out.extend(f"  {lab} = {v}" for lab, v in zip(inv.labels, inv.first_row))
    return "\n".join(out) + "\n"


def cmd_eigs(args, kinds, ns):
    rows = []
    for k in kinds:
        for n in ns:
            dft = eigenvalues_dft(build_sequence_circulant(k, n)).lambdas
            for j in range(n):
                closed = eigen.eigenvalue_closed(k, n, j)
                err = abs(closed - dft[j]) / (1 + abs(dft[j]))
                rows.append((k, n, j, dft[j], closed, err <= args.tol))
    if args.format == "json":
        payload = [
            {"kind": k.value, "n": n, "k": j, "dft": complex_to_json(d), "closed_form": complex_to_json(c), "match": m}
            for k, n, j, d, c, m in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    return _table(
        [[k.value, n, j, _fmt_complex(d), _fmt_complex(c), str(m).lower()] for k, n, j, d, c, m in rows],
        ["kind", "n", "k", "dft", "closed_form", "match"],
    )


def cmd_verify(args, kinds, ns):
    report = None
    for k in kinds:
        part = verify_all(k, ns, workers=args.workers)
        report = part if report is None else report + part
    if args.format == "json":
        text = report.dumps() + "\n"
    else:
        rows = [[r.kind.value, r.n, r.claim, r.status, r.detail] for r in report.records]
        counts = report.counts()
        text = _table(rows, ["kind", "n", "claim", "status", "detail"])
        text += "summary: " + ", ".join(f"{counts[s]} {s}" for s in counts) + "\n"
    return text, (0 if report.ok else 1)


def cmd_bench(args, kinds, ns):
    from .bench import METHODS, run_bench, to_csv

    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise UsageError(f"bench: unknown method(s) {', '.join(unknown)}")
    rows = run_bench(kinds, ns, methods, repeat=args.repeat)
    return to_csv(rows, repeat=args.repeat)


COMMANDS = {
    "seq": cmd_seq,
    "build": cmd_build,
    "det": cmd_det,
    "invert": cmd_invert,
    "eigs": cmd_eigs,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def run(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    kinds = _kinds(args.kind)
    ns = _orders(args)
    result = COMMANDS[args.command](args, kinds, ns)
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, stdout)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
