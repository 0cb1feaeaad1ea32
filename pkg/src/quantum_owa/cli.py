"""Command line front end.

Subcommands::

    qowa validate FILE
    qowa weights --n N --alpha A [--csv]
    qowa likelihood FILE --alpha A --mode soft|direct|product [--csv]
    qowa sweep FILE --start S --end E --step D

Exit status is 0 on success, 1 when the input violates a constraint and 2
for usage or parse errors.  Tables show 4 decimals; CSV output carries
shortest round-trip floats so nothing is lost.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .core import (
    EvidenceSet,
    QuantumMassFunction,
    format_complex,
    modulus,
    validate_mass_function,
)
from .errors import (
    DuplicateLabel,
    EmptyEvidence,
    InvalidProbability,
    QuantumOWAError,
)
from .likelihood import (
    alpha_sweep,
    cumulative_products,
    quantum_owa_direct,
    quantum_soft_likelihood,
    sort_by_modulus,
)
from .weights import MAX_LIMIT, MIN_LIMIT, attitudinal_weights

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

MODES = ("soft", "direct", "product")
SWEEP_HEADER = "alpha,re,im,modulus"


def fmt_full(x: float) -> str:
    # shortest repr that round-trips; +0.0 folds -0.0 into 0.0
    return repr(float(x) + 0.0)


def _csv(rows: Sequence[Sequence]) -> str:
    return "".join(",".join(str(c) for c in row) + "\n" for row in rows)


def parse_alpha(text: str):
    """Float in (0, 1), or ``min`` / ``max`` for the limit markers."""
    t = text.strip().lower()
    if t == "min":
        return MIN_LIMIT
    if t == "max":
        return MAX_LIMIT
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None


def _alpha_text(alpha) -> str:
    return alpha.name.lower() if alpha in (MIN_LIMIT, MAX_LIMIT) else f"{alpha:g}"


# -- subcommand bodies (return rendered text) ---------------------------------


def cmd_weights(n: int, alpha, csv: bool = False) -> str:
    w = attitudinal_weights(n, alpha)
    if csv:
        return _csv([("index", "weight")] + [(i, fmt_full(x)) for i, x in enumerate(w, 1)])
    lines = [f"OWA weights, n={w.n}, alpha={_alpha_text(alpha)}", "index  weight"]
    lines += [f"{i:<5}  {x:.4f}" for i, x in enumerate(w, 1)]
    return "\n".join(lines) + "\n"


def cmd_likelihood(evidence: EvidenceSet, alpha, mode: str = "soft", csv: bool = False) -> str:
    if mode not in MODES:
        raise QuantumOWAError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    s = sort_by_modulus(evidence)
    weights = prods = None
    if mode == "soft":
        trace = quantum_soft_likelihood(evidence, alpha)
        prods, weights, result = trace.cumulative_products, trace.weights, trace.result
    elif mode == "direct":
        result = quantum_owa_direct(evidence, alpha)
        weights = attitudinal_weights(len(s), alpha)
    else:
        prods = cumulative_products(s)
        result = prods[-1]

    if csv:
        rows = [("step", "index", "source", "re", "im", "modulus", "weight")]
        for k, (lab, p) in enumerate(zip(s.labels, s.ordered), 1):
            w = fmt_full(weights[k - 1]) if mode == "direct" else ""
            rows.append(("sorted", k, lab, fmt_full(p.re), fmt_full(p.im), fmt_full(modulus(p)), w))
        for k, p in enumerate(prods or (), 1):
            w = fmt_full(weights[k - 1]) if weights is not None else ""
            rows.append(("product", k, s.labels[k - 1], fmt_full(p.re), fmt_full(p.im),
                         fmt_full(modulus(p)), w))
        rows.append(("result", "", "", fmt_full(result.re), fmt_full(result.im),
                     fmt_full(modulus(result)), ""))
        return _csv(rows)

    header = f"{len(s)} sources, mode={mode}"
    if mode != "product":
        header += f", alpha={_alpha_text(alpha)}"
    lines = [header, "", "order  source  re       im       modulus"]
    for k, (lab, p) in enumerate(zip(s.labels, s.ordered), 1):
        lines.append(f"{k:<5}  {lab:<6}  {p.re:+.4f}  {p.im:+.4f}  {modulus(p):.4f}")
    if prods is not None:
        lines += ["", "cumulative products"]
        for k, p in enumerate(prods, 1):
            lines.append(f"Prod({k}) = {format_complex(p.re, p.im)}")
    if weights is not None:
        lines += ["", "weights"]
        lines += [f"w{k} = {x:.4f}" for k, x in enumerate(weights, 1)]
    lines += ["", f"likelihood = {format_complex(result.re, result.im)}  (modulus {modulus(result):.4f})"]
    return "\n".join(lines) + "\n"


def cmd_sweep(evidence: EvidenceSet, start: float, end: float, step: float) -> str:
    sweep = alpha_sweep(evidence, start, end, step)
    rows = [SWEEP_HEADER.split(",")]
    for r in sweep:
        p = r.likelihood
        rows.append((fmt_full(r.alpha), fmt_full(p.re), fmt_full(p.im), fmt_full(r.modulus)))
    return _csv(rows)


def _validate_evidence_doc(doc) -> tuple[str, int]:
    records = io.parse_evidence_records(doc)
    problems = []
    if not records:
        problems.append("no sources")
    seen = set()
    for r in records:
        if r.label in seen:
            problems.append(f"{r.location}: duplicate label {r.label!r}")
        seen.add(r.label)
        if r.amplitude is not None and r.amplitude < 0:
            problems.append(f"{r.location}: source {r.label!r} has negative amplitude {r.amplitude:g}")
        elif r.modulus > 1.0 + 1e-12:
            problems.append(f"{r.location}: source {r.label!r} has modulus {r.modulus:.6g} > 1")
    if problems:
        return "INVALID evidence\n" + "".join(f"  {p}\n" for p in problems), EXIT_INVALID
    return f"OK: {len(records)} sources, all moduli <= 1\n", EXIT_OK


def _validate_mass_doc(doc) -> tuple[str, int]:
    frame, records = io.parse_mass_records(doc)
    problems = []
    assignments = []
    for subset, r in records:
        try:
            assignments.append((subset, r.to_probability()))
        except InvalidProbability as exc:
            problems.append(f"{r.location}: {exc}")
    try:
        m = QuantumMassFunction(frame, assignments)
    except (DuplicateLabel, ValueError) as exc:
        problems.append(str(exc))
        m = None
    if m is not None:
        report = validate_mass_function(m)
        problems += [str(v) for v in report.violations]
    if problems:
        return "INVALID mass function\n" + "".join(f"  {p}\n" for p in problems), EXIT_INVALID
    return (
        f"OK: {len(records)} focal subsets on a frame of {len(frame)} events, "
        f"squared moduli sum to {report.total:.12g}\n",
        EXIT_OK,
    )


def cmd_validate(path) -> tuple[str, int]:
    """Validate an evidence or mass-function document; returns ``(report, exit_status)``."""
    doc = io.read_json(path)
    if io.document_kind(doc) == "evidence":
        return _validate_evidence_doc(doc)
    return _validate_mass_doc(doc)


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qowa", description="Quantum soft likelihood functions via OWA aggregation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an evidence or mass-function file")
    p.add_argument("file")

    p = sub.add_parser("weights", help="print attitudinal OWA weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("likelihood", help="evaluate one likelihood with its trace")
    p.add_argument("file")
    p.add_argument("--alpha", type=parse_alpha, default=0.5)
    p.add_argument("--mode", choices=MODES, default="soft")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("sweep", help="CSV of the soft likelihood over an alpha grid")
    p.add_argument("file")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--end", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    return parser


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (InvalidProbability, DuplicateLabel, EmptyEvidence)):
        return EXIT_INVALID
    return EXIT_USAGE


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        if args.command == "validate":
            text, code = cmd_validate(args.file)
            (stdout if code == EXIT_OK else stderr).write(text)
            return code
        if args.command == "weights":
            stdout.write(cmd_weights(args.n, args.alpha, csv=args.csv))
        elif args.command == "likelihood":
            e = io.load_evidence(args.file)
            stdout.write(cmd_likelihood(e, args.alpha, args.mode, csv=args.csv))
        elif args.command == "sweep":
            e = io.load_evidence(args.file)
            stdout.write(cmd_sweep(e, args.start, args.end, args.step))
    except QuantumOWAError as exc:
        kind = type(exc).__name__
        stderr.write(f"qowa {args.command}: {kind}: {exc}\n")
        return _exit_code(exc)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
