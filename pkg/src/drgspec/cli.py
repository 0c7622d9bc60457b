"""Command-line interface: ``analyze``, ``phi-curve`` and ``generate``."""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional

import numpy as np

from . import report
from .classify import Tolerances, classify
from .errors import DrgSpecError, InputError, NumericalError
from .graphcore import generate_family, parse_edge_list, parse_graph6, to_graph6
from .spectra import SpectrumInput, graph_spectrum, load_spectrum_input
from .theorems import check_index_set, phi_coefficients

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _first_record(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return line
    return ""


def _parse_subset(text: Optional[str]):
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"bad --subset {text!r}") from exc


def _load_input(args):
    """Return ``(graph, spectrum_input)``; exactly one is not None."""
    if args.graph6 is not None:
        return parse_graph6(_first_record(_read(args.graph6)), name=args.graph6), None
    if args.edges is not None:
        return parse_edge_list(_read(args.edges), name=args.edges), None
    if args.family is not None:
        return generate_family(args.family), None
    doc = load_spectrum_input(_read(args.spectrum))
    if doc.name is None:
        doc = SpectrumInput(doc.spectrum, doc.kd_mean, doc.sd1_mean, args.spectrum)
    return None, doc


def _add_input_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="FILE", help="graph6 file ('-' for stdin)")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", metavar="SPEC", help="generator family, e.g. odd:5")
    src.add_argument("--spectrum", metavar="FILE", help="spectrum JSON document")
    p.add_argument("--tol-cluster", type=float, default=None,
                   help="eigenvalue clustering gap (default 1e-7*max(1,lambda_0))")


def cmd_analyze(args) -> int:
    graph, doc = _load_input(args)
    tol = Tolerances(eq=args.tol_eq, cluster=args.tol_cluster)
    result = classify(graph, doc, tolerances=tol, subset=_parse_subset(args.subset))
    out = report.to_json(result) if args.json else report.to_text(result)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_phi_curve(args) -> int:
    graph, doc = _load_input(args)
    s = graph_spectrum(graph, args.tol_cluster) if graph is not None else doc.spectrum
    H = check_index_set(_parse_subset(args.subset), s.d)
    coeffs = phi_coefficients(s, H)
    center = 0.0 if coeffs.t0 is None else coeffs.t0
    half = 5.0 * (1.0 + abs(center))
    t_min = center - half if args.t_min is None else args.t_min
    t_max = center + half if args.t_max is None else args.t_max
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    ts = np.linspace(t_min, t_max, args.steps) if args.steps > 1 else np.array([t_min])
    out = sys.stdout
    if coeffs.degenerate:
        out.write(f"# degenerate H={list(H)}: no finite maximiser; "
                  f"sup phi={coeffs.phi_max:.12g}\n")
    else:
        out.write(f"# t0={coeffs.t0:.12g} phi_max={coeffs.phi_max:.12g}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "phi"])
    for t, phi in zip(ts, coeffs.phi(ts)):
        writer.writerow([f"{t:.12g}", f"{phi:.12g}"])
    return EXIT_OK


def cmd_generate(args) -> int:
    sys.stdout.write(to_graph6(generate_family(args.family)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drgspec",
        description="Spectral tests for distance-regularity and partial antipodality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run every bound and print a classification report")
    _add_input_args(p)
    p.add_argument("--tol-eq", type=float, default=1e-6, help="relative equality tolerance")
    p.add_argument("--subset", metavar="I,J,...", help="restrict the index-set bound to one H")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("phi-curve", help="sample phi(t) for one index set as CSV")
    _add_input_args(p)
    p.add_argument("--subset", metavar="I,J,...", required=True)
    p.add_argument("--t-min", type=float, default=None)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=401)
    p.set_defaults(func=cmd_phi_curve)

    p = sub.add_parser("generate", help="print a family graph in graph6")
    p.add_argument("--family", metavar="SPEC", required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericalError, DrgSpecError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
