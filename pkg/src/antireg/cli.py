"""Command line: ``antireg generate | spectrum | verify | sweep``.

Exit codes: 0 success, 1 runtime or invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from antireg.errors import InvalidInputError, InvariantViolationError, NumericFailureError
from antireg.export import FORMATS, density_csv, fmt_float, render_graph, spectrum_csv_rows
from antireg.graph_core import (
    adjacency_matrix,
    antiregular_connected,
    antiregular_disconnected,
    degree_sequence,
    from_binary_sequence,
    is_connected,
)
from antireg.matrix_ops import x_matrix
from antireg.spectra import (
    closed_form_spectrum_g,
    closed_form_spectrum_x,
    closure_density_report,
    max_discrepancy,
    numeric_spectrum,
    oracle_spectrum,
    spectrum_h,
)
from antireg.verify import SUITES, run_suite

ORACLE_CAP = 24


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    return n


def _graph(kind: str, value: str):
    if kind == "gn":
        return antiregular_connected(_positive_int(value))
    if kind == "hn":
        return antiregular_disconnected(_positive_int(value))
    return from_binary_sequence(value)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_generate(args) -> int:
    G = _graph(args.kind, args.value)
    summary = (
        f"sequence: {G.sequence}\n"
        f"degrees: {degree_sequence(G)}\n"
        f"{'connected' if is_connected(G) else 'disconnected'}\n"
    )
    if args.format is None:
        sys.stdout.write(summary)
        return 0
    artifact = render_graph(G, args.format)
    if args.out is None or args.out == "-":
        # stdout carries the artifact, so the summary moves to stderr
        sys.stderr.write(summary)
        sys.stdout.write(artifact)
    else:
        _write(artifact, args.out)
        sys.stdout.write(summary)
    return 0


def _target_matrix(target: str, value: str):
    if target == "x":
        return x_matrix(_positive_int(value))
    return adjacency_matrix(_graph(target, value))


def _closed(target: str, value: str):
    n = _positive_int(value)
    return {"gn": closed_form_spectrum_g, "hn": spectrum_h, "x": closed_form_spectrum_x}[target](n)


def cmd_spectrum(args) -> int:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.target == "sequence" and args.method == "closed":
        raise UsageError("no closed form for an arbitrary creation sequence; use numeric or oracle")
    A = _target_matrix(args.target, args.value)
    methods = ["closed", "numeric", "oracle"] if args.method == "all" else [args.method]
    if args.target == "sequence" and args.method == "all":
        methods.remove("closed")
    if "oracle" in methods and A.n > args.oracle_cap:
        if args.method == "oracle":
            raise UsageError(
                f"oracle root isolation is capped at n <= {args.oracle_cap} (got n = {A.n}); "
                "raise --oracle-cap to override"
            )
        methods.remove("oracle")
        sys.stderr.write(f"note: oracle skipped, n = {A.n} exceeds --oracle-cap {args.oracle_cap}\n")

    spectra = []
    for m in methods:
        if m == "closed":
            spectra.append(_closed(args.target, args.value))
        elif m == "numeric":
            spectra.append(numeric_spectrum(A, args.tol))
        else:
            spectra.append(oracle_spectrum(A, args.tol))

    lines = ["index,value,method"]
    for s in spectra:
        lines += spectrum_csv_rows(s)
    if len(spectra) > 1:
        lines.append(f"# max_discrepancy={fmt_float(max_discrepancy(*spectra))}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    n_max = _positive_int(args.n_max)
    checks = run_suite(args.suite, n_max)
    for c in checks:
        print(c.line())
    gated = [c for c in checks if not c.info]
    failed = [c for c in gated if not c.passed]
    print(f"{len(gated) - len(failed)}/{len(gated)} checks passed (n_max = {n_max})")
    return 1 if failed else 0


def cmd_sweep(args) -> int:
    n_max = _positive_int(args.n_max)
    try:
        rows = closure_density_report(n_max, args.lo, args.hi, args.step)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    _write(density_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antireg",
        description="Anti-regular threshold graphs with loops: generation, spectra, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build G_n, H_n or a graph from a creation sequence")
    g.add_argument("kind", choices=("gn", "hn", "sequence"))
    g.add_argument("value", help="n for gn/hn, a bit string such as 101 for sequence")
    g.add_argument("--format", choices=FORMATS, default=None)
    g.add_argument("--out", default=None, help="output path (default: stdout)")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("spectrum", help="print sorted eigenvalues as CSV")
    s.add_argument("target", choices=("gn", "hn", "x", "sequence"))
    s.add_argument("value", help="n, or a bit string for sequence")
    s.add_argument("--method", choices=("closed", "numeric", "oracle", "all"), default="closed")
    s.add_argument("--tol", type=float, default=1e-12)
    s.add_argument("--oracle-cap", type=int, default=ORACLE_CAP)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", help="run invariant suites up to n_max")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("n_max")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", help="closure density table for G_1..G_{n_max}")
    w.add_argument("n_max")
    w.add_argument("--lo", type=float, default=-10.0)
    w.add_argument("--hi", type=float, default=10.0)
    w.add_argument("--step", type=float, default=0.01)
    w.add_argument("--out", default=None)
    w.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidInputError) as exc:
        parser.print_usage(sys.stderr)
        print(f"antireg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"antireg {args.command}: I/O error: {exc}", file=sys.stderr)
        return 1
    except (InvariantViolationError, NumericFailureError) as exc:
        print(f"antireg {args.command}: failure: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
