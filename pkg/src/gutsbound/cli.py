"""
Command line front end.

Exit codes: 0 for a bound or a hungry form, 2 when the splitting surface is
compressible, 3 for invalid input (schema, labels, side validation or
hypotheses).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from .core import (
    GutsboundError,
    MirroredDiskOrbifold,
    SphereOrbifold,
    classify_triple,
    euler_mirrored_disk,
    euler_sphere,
    format_fraction,
)
from .documents import DocumentError, Report, hungry_witness, load_document, report_outcome
from .engine import CASE_KEYS, corollary_bound, minimum_positive_bound, volume_bound
from .numerics import v8
from .splitting import InvalidSide, RegularNeighborhood
from .tangle import TangleWord, assemble_hungry, cycle_notation, induced_permutation, reduce

EXIT_OK, EXIT_COMPRESSIBLE, EXIT_INVALID = 0, 2, 3
DEFAULT_SWEEP_CAP = 40
SWEEP_CAP_ENV = "GUTSBOUND_MAX_LABEL"


def sweep_cap() -> int:
    value = os.environ.get(SWEEP_CAP_ENV)
    return int(value) if value else DEFAULT_SWEEP_CAP


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _invalid(exc: Exception) -> Report:
    if isinstance(exc, DocumentError):
        violations = exc.violations
    elif isinstance(exc, InvalidSide):
        violations = [str(v) for v in exc.report.violations]
    else:
        violations = [str(exc)]
    return Report("invalid", violations=violations)


def _emit(report: Report, fmt: str) -> int:
    print(report.to_json() if fmt == "json" else report.to_text())
    return report.exit_code


def run_bound(text: str, digits: int = 6) -> Report:
    try:
        doc = load_document(text)
        if not isinstance(doc.surface, SphereOrbifold):
            raise DocumentError(["'bound' needs a sphere surface; use 'corollary' for a mirrored disk"])
        if doc.side1 is None:
            raise DocumentError(["'bound' needs side1"])
        return report_outcome(volume_bound(doc.surface, doc.side0, doc.side1, doc.sigma), digits)
    except GutsboundError as exc:
        return _invalid(exc)


def run_corollary(text: str, digits: int = 6) -> Report:
    try:
        doc = load_document(text)
        if not isinstance(doc.surface, MirroredDiskOrbifold):
            raise DocumentError(["'corollary' needs a mirrored_disk surface"])
        if doc.side1 is not None and not isinstance(doc.side1, RegularNeighborhood):
            raise DocumentError(["side1 of a mirrored disk is its regular neighborhood"])
        return report_outcome(corollary_bound(doc.surface, doc.side0, doc.sigma), digits)
    except GutsboundError as exc:
        return _invalid(exc)


def run_hungry(text: str) -> Report:
    try:
        doc = load_document(text)
        form = assemble_hungry(doc.surface, doc.side0, doc.side1, doc.sigma or TangleWord(),
                               doc.side1_labels)
        return Report("hungry", witness=hungry_witness(form))
    except GutsboundError as exc:
        return _invalid(exc)


def run_sweep(label_max: int, case: str | None = None, digits: int = 4) -> tuple[str, int]:
    """CSV of per-case minima followed by the global minimum row."""
    cap = sweep_cap()
    if label_max > cap:
        return f"label max {label_max} exceeds cap {cap} (set {SWEEP_CAP_ENV} to raise it)\n", EXIT_INVALID
    if label_max < 3:
        return "no positive bound; hypothesis violation\n", EXIT_INVALID
    cases = CASE_KEYS if case is None else (case,)
    result = minimum_positive_bound(label_max, cases)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["case", "coefficient", "numeric", "witness"])
    rows = list(result.minima.values())
    if result.global_minimum is not None:
        rows.append(result.global_minimum)
    for coefficient, witness in rows:
        writer.writerow([witness.case, format_fraction(coefficient),
                         f"{float(coefficient) * v8():.{digits}f}",
                         "{" + ",".join(map(str, witness.formula_labels)) + "}"])
    if result.global_minimum is None:
        return "no positive bound; hypothesis violation\n", EXIT_INVALID
    return buf.getvalue(), EXIT_OK


_SURFACE_SPEC = re.compile(r"^\s*(S2|D2\*?)\s*\(([\d,\s]*)\)\s*$")


def parse_surface_spec(text: str):
    """``S2(2,3,3,3)`` or ``D2*(3,5)``."""
    m = _SURFACE_SPEC.match(text)
    if m is None:
        raise DocumentError([f"cannot parse orbifold {text!r}; expected S2(...) or D2*(...)"])
    labels = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
    try:
        if m.group(1) == "S2":
            return SphereOrbifold(labels)
        if len(labels) != 2:
            raise DocumentError(["a mirrored disk has exactly two cone labels"])
        return MirroredDiskOrbifold(*labels)
    except ValueError as exc:
        raise DocumentError([str(exc)]) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--v8-digits", type=int, default=6, dest="digits",
                        help="displayed precision of numeric values")

    parser = argparse.ArgumentParser(prog="gutsbound", parents=[common],
                                     description="Guts-based volume lower bounds for 3-orbifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [("bound", "bound for an S2(n1,n2,n3,n4) splitting"),
                            ("corollary", "bound for a D2*(n1,n2) splitting"),
                            ("hungry", "assemble an empty-guts gluing")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="problem document, '-' for stdin")

    p = sub.add_parser("sweep", parents=[common], help="minimum positive bound per case")
    p.add_argument("--max", type=int, required=True, dest="label_max")
    p.add_argument("--case", choices=CASE_KEYS)
    p.add_argument("--digits", type=int, default=4, dest="sweep_digits")

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic of S2(...) or D2*(...)")
    p.add_argument("spec")

    p = sub.add_parser("classify", parents=[common], help="classify a vertex triple")
    p.add_argument("labels", type=int, nargs=3)

    p = sub.add_parser("v8", parents=[common], help="volume of the regular ideal octahedron")
    p.add_argument("--digits", type=int, default=None, dest="v8_only_digits")

    p = sub.add_parser("tangle", parents=[common], help="tangle word utilities")
    p.add_argument("action", choices=["perm", "reduce"])
    p.add_argument("word", nargs="*", help="letters s1 s1' s2 s2' s3 s3'")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format

    if args.command in ("bound", "corollary", "hungry"):
        try:
            text = _read(args.file)
        except OSError as exc:
            return _emit(Report("invalid", violations=[str(exc)]), fmt)
        if args.command == "bound":
            return _emit(run_bound(text, args.digits), fmt)
        if args.command == "corollary":
            return _emit(run_corollary(text, args.digits), fmt)
        return _emit(run_hungry(text), fmt)

    if args.command == "sweep":
        out, code = run_sweep(args.label_max, args.case, args.sweep_digits)
        (sys.stdout if code == EXIT_OK else sys.stderr).write(out)
        return code

    try:
        if args.command == "euler":
            surface = parse_surface_spec(args.spec)
            chi = euler_sphere(surface) if isinstance(surface, SphereOrbifold) else euler_mirrored_disk(surface)
            payload = {"orbifold": str(surface), "euler_characteristic": format_fraction(chi)}
        elif args.command == "classify":
            payload = {"triple": args.labels, "class": classify_triple(*args.labels).value}
        elif args.command == "v8":
            digits = args.v8_only_digits if args.v8_only_digits is not None else args.digits
            payload = {"v8": f"{v8():.{digits}f}"}
        else:
            word = TangleWord.parse(" ".join(args.word))
            if args.action == "perm":
                perm = induced_permutation(word)
                payload = {"word": str(word), "permutation": cycle_notation(perm),
                           "images": [i + 1 for i in perm]}
            else:
                payload = {"word": str(word), "reduced": str(reduce(word))}
    except (GutsboundError, ValueError) as exc:
        return _emit(_invalid(exc), fmt)

    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        width = max(len(k) for k in payload)
        for key, value in payload.items():
            print(f"{key.ljust(width)}  {value}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
