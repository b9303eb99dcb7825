"""Command-line front end.

Subcommands: check | enumerate | basis | reduce | equiv | consequence |
conjecture.  Payloads go to stdout (JSON by default, CSV for piping, text
for reading), diagnostics to stderr.  Exit codes: 0 success, 2 on
validation failure, 3 when the conjecture sweep leaves unresolved cases.
The environment variable GIP_THREADS caps the worker count used for
enumeration sweeps.

Monomials on the wire are comma-separated residues in 0..n-1; a generators
file holds one such sequence per line, with blank lines and '#' comments
ignored.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebra import AlgebraSpec, make_algebra_spec
from .consequence import (
    conjecture_report,
    equivalence_witness,
    evaluate_ordering,
    is_consequence,
)
from .errors import GipError, OutOfRange
from .evaluation import collapse
from .identities import (
    check_identity,
    enumerate_identities,
    identities_with_prefix,
    minimal_basis_bt_n11,
)

FORMATS = ("json", "csv", "text")


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise OutOfRange(f"cannot parse {what} {text!r} as comma-separated integers")


def _spec_from(args: argparse.Namespace) -> AlgebraSpec:
    if args.n is None or args.blocks is None:
        raise OutOfRange("--n and --blocks are required")
    return make_algebra_spec(args.n, _parse_int_list(args.blocks, "--blocks"))


def _monomial_from(args: argparse.Namespace, attr: str = "monomial") -> tuple[int, ...]:
    raw = getattr(args, attr)
    if raw is None:
        raise OutOfRange(f"--{attr.replace('_', '-')} is required")
    return _parse_int_list(raw, f"--{attr}")


def _thread_count() -> int:
    raw = os.environ.get("GIP_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def _collect_identities(
    spec: AlgebraSpec, max_degree: int, nonzero_only: bool
) -> list[tuple[int, ...]]:
    threads = _thread_count()
    residues = list(range(1, spec.n)) if nonzero_only else list(range(spec.n))
    if threads <= 1 or len(residues) <= 1:
        return list(enumerate_identities(spec, max_degree, nonzero_only))
    workers = min(threads, len(residues))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(identities_with_prefix, spec, (r,), max_degree, nonzero_only)
            for r in residues
        ]
        merged = [seq for future in futures for seq in future.result()]
    merged.sort(key=lambda s: (len(s), s))
    return merged


def _read_generators(path: str) -> list[tuple[int, ...]]:
    generators = []
    for line in Path(path).read_text().splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        generators.append(_parse_int_list(stripped, f"generator line {stripped!r}"))
    if not generators:
        raise OutOfRange(f"no generators found in {path}")
    return generators


def _seq_str(seq: Sequence[int]) -> str:
    return ",".join(map(str, seq))


# --- command handlers: return (input echo, result payload, csv rows, exit code)


def _cmd_check(args):
    spec = _spec_from(args)
    monomial = _monomial_from(args)
    report = check_identity(spec, monomial, with_profile=args.profile)
    result = {
        "identity": report.is_identity,
        "witness_rows": list(report.witness.rows) if report.witness else None,
    }
    if report.profile is not None:
        result["profile"] = [
            [s.prefix_length, s.empty_lines, s.fall] for s in report.profile
        ]
    witness = " ".join(map(str, report.witness.rows)) if report.witness else ""
    rows = [["identity", "witness_rows"], [str(report.is_identity).lower(), witness]]
    echo = {"n": spec.n, "blocks": list(spec.blocks), "monomial": list(monomial)}
    return echo, result, rows, 0


def _cmd_enumerate(args):
    spec = _spec_from(args)
    nonzero_only = not args.include_zero
    identities = _collect_identities(spec, args.max_degree, nonzero_only)
    result = {
        "count": len(identities),
        "identities": [list(seq) for seq in identities],
    }
    rows = [[_seq_str(seq)] for seq in identities]
    if args.figure:
        from .plotting import save_identity_counts

        counts = [
            (k, sum(1 for seq in identities if len(seq) == k))
            for k in range(1, args.max_degree + 1)
        ]
        save_identity_counts(
            args.figure, counts, f"monomial identities of {spec}"
        )
    echo = {
        "n": spec.n,
        "blocks": list(spec.blocks),
        "max_degree": args.max_degree,
        "nonzero_only": nonzero_only,
    }
    return echo, result, rows, 0


def _cmd_basis(args):
    spec = _spec_from(args)
    if spec.blocks != (spec.n - 1, 1):
        raise OutOfRange(
            f"basis requires blocks {spec.n - 1},1 for --n {spec.n}, "
            f"got {_seq_str(spec.blocks)}"
        )
    basis = minimal_basis_bt_n11(spec.n)
    result = {"count": len(basis), "monomials": [list(seq) for seq in basis.monomials]}
    rows = [[_seq_str(seq)] for seq in basis.monomials]
    if args.figure:
        from .plotting import save_identity_counts

        save_identity_counts(
            args.figure,
            [(spec.n, len(basis))],
            f"minimal basis size of {spec}",
        )
    echo = {"n": spec.n, "blocks": list(spec.blocks)}
    return echo, result, rows, 0


def _cmd_reduce(args):
    spec = _spec_from(args)
    monomial = _monomial_from(args)
    collapsed = collapse(spec, monomial)
    result = {"collapsed": list(collapsed), "length": len(collapsed)}
    rows = [[_seq_str(collapsed)]]
    echo = {"n": spec.n, "blocks": list(spec.blocks), "monomial": list(monomial)}
    return echo, result, rows, 0


def _cmd_equiv(args):
    if args.n is None:
        raise OutOfRange("--n is required")
    degrees = _monomial_from(args, "degrees")
    perm_a = _parse_int_list(args.perm_a, "--perm-a")
    perm_b = _parse_int_list(args.perm_b, "--perm-b")
    witness = equivalence_witness(args.n, degrees, perm_a, perm_b)
    result = {"equivalent": witness is not None, "witness_rows": None}
    if witness is not None:
        result["witness_rows"] = list(witness.rows)
        value = evaluate_ordering(args.n, degrees, perm_a, witness)
        assert value is not None
        result["value"] = [value.row, value.col]
    rows = [
        ["equivalent", "witness_rows"],
        [
            str(result["equivalent"]).lower(),
            " ".join(map(str, witness.rows)) if witness else "",
        ],
    ]
    echo = {
        "n": args.n,
        "degrees": list(degrees),
        "perm_a": list(perm_a),
        "perm_b": list(perm_b),
    }
    return echo, result, rows, 0


def _cmd_consequence(args):
    spec = _spec_from(args)
    monomial = _monomial_from(args)
    generators = _read_generators(args.generators_file)
    verdict = is_consequence(spec, monomial, generators)
    result: dict = {"status": verdict.status}
    if verdict.derivation is not None:
        d = verdict.derivation
        result["generator"] = list(d.generator)
        result["window_start"] = d.window_start
        result["blocks"] = [list(b) for b in d.blocks]
        result["stripped_positions"] = list(d.stripped_positions)
        result["rearrangement_steps"] = len(d.steps)
    rows = [
        ["status", "generator"],
        [
            verdict.status,
            _seq_str(verdict.derivation.generator) if verdict.derivation else "",
        ],
    ]
    echo = {
        "n": spec.n,
        "blocks": list(spec.blocks),
        "monomial": list(monomial),
        "generators_file": args.generators_file,
    }
    return echo, result, rows, 0


def _cmd_conjecture(args):
    spec = _spec_from(args)
    report = conjecture_report(spec)
    result = {
        "max_length": report.max_length,
        "identity_counts": {str(k): c for k, c in report.identity_counts},
        "minimal_generating_degree": report.minimal_generating_degree,
        "holds": report.holds,
        "checked_level": report.checked_level,
        "confirmed_counts": {str(k): c for k, c in report.confirmed_counts},
        "unresolved": [list(seq) for seq in report.unresolved],
    }
    rows = [["degree", "identities", "confirmed", "unresolved"]]
    confirmed = dict(report.confirmed_counts)
    unresolved_by_len: dict[int, int] = {}
    for seq in report.unresolved:
        unresolved_by_len[len(seq)] = unresolved_by_len.get(len(seq), 0) + 1
    for k, count in report.identity_counts:
        rows.append(
            [
                str(k),
                str(count),
                str(confirmed.get(k, "")),
                str(unresolved_by_len.get(k, 0)) if k in confirmed else "",
            ]
        )
    if args.figure:
        from .plotting import save_conjecture_counts

        save_conjecture_counts(
            args.figure,
            report.identity_counts,
            report.confirmed_counts,
            report.checked_level,
            f"monomial identities of {spec}",
        )
    echo = {"n": spec.n, "blocks": list(spec.blocks)}
    return echo, result, rows, 3 if report.unresolved else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gip",
        description=(
            "Graded monomial identities of block-triangular matrix algebras: "
            "check, enumerate, reduce, and explain."
        ),
    )
    parser.add_argument("--version", action="version", version=f"gip {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="matrix size and grading modulus")
    common.add_argument("--blocks", help="comma-separated block sizes, e.g. 4,1")
    common.add_argument(
        "--format", choices=FORMATS, default="json", help="output format"
    )
    common.add_argument(
        "--profile", action="store_true", help="include the fall profile (check)"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one monomial")
    p.add_argument("--monomial", required=True, help="comma-separated degrees")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser(
        "enumerate", parents=[common], help="list identities up to a degree cap"
    )
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--include-zero",
        action="store_true",
        help="also sweep degree-0 residues (default: nonzero only)",
    )
    p.add_argument("--figure", help="write a per-degree count figure to this path")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser(
        "basis",
        parents=[common],
        help="minimal basis of monomial identities (blocks n-1,1)",
    )
    p.add_argument("--figure", help="write a basis-size figure to this path")
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser(
        "reduce", parents=[common], help="collapse an identity to a shorter one"
    )
    p.add_argument("--monomial", required=True)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser(
        "equiv",
        parents=[common],
        help="equivalence of two orderings modulo the full-matrix identities",
    )
    p.add_argument("--degrees", required=True, help="comma-separated degrees")
    p.add_argument("--perm-a", required=True, help="first ordering, 1-based")
    p.add_argument("--perm-b", required=True, help="second ordering, 1-based")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser(
        "consequence",
        parents=[common],
        help="derive a monomial identity from a generators file",
    )
    p.add_argument("--monomial", required=True)
    p.add_argument("--generators-file", required=True)
    p.set_defaults(handler=_cmd_consequence)

    p = sub.add_parser(
        "conjecture",
        parents=[common],
        help="census of identities up to 2n-2 and their generating degree",
    )
    p.add_argument("--figure", help="write a per-degree census figure to this path")
    p.set_defaults(handler=_cmd_conjecture)

    return parser


def _emit(command, echo, result, rows, fmt, elapsed_ms) -> None:
    if fmt == "json":
        report = {
            "command": command,
            "input": echo,
            "result": result,
            "time_ms": round(elapsed_ms, 3),
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True))
    elif fmt == "csv":
        for row in rows:
            print(",".join(row))
    else:
        print(f"# gip {__version__} {command}")
        for key, value in echo.items():
            print(f"# {key}: {value}")
        for key, value in result.items():
            print(f"{key}: {value}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        echo, result, rows, code = args.handler(args)
    except GipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    _emit(args.command, echo, result, rows, args.format, elapsed_ms)
    return code


if __name__ == "__main__":
    sys.exit(main())
