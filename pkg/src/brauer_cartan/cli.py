"""Command line front end: ``brauer-cartan <command> ...``.

Exit codes: 0 success, 1 domain failure (invalid configuration, failed
check), 2 usage error (bad arguments, unreadable file).  Diagnostics go to
stderr as single ``error: <kind>: <detail>`` lines.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .cartan import algebra_dimension, cartan_matrix
from .document import load_document, parse
from .errors import ConfigSyntaxError, SemanticError
from .fuzz import run_fuzz
from .oracle import oracle_cartan_matrix
from .quiver import build_quiver, generate_relations

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse(_read(path))


def cmd_validate(args) -> int:
    config = load_document(_read(args.file))
    violations = list(config.violations)
    if not violations:
        print("ok")
        return EXIT_OK
    for v in violations:
        print(v)
    return EXIT_FAIL


def cmd_quiver(args) -> int:
    quiver = build_quiver(_load(args.file))
    writer = formats.quiver_to_dot if args.format == "dot" else formats.quiver_to_json
    sys.stdout.write(writer(quiver))
    return EXIT_OK


def cmd_cartan(args) -> int:
    m = cartan_matrix(_load(args.file))
    writer = {
        "table": formats.matrix_to_table,
        "csv": formats.matrix_to_csv,
        "json": formats.matrix_to_json,
    }[args.format]
    sys.stdout.write(writer(m))
    return EXIT_OK


def cmd_dim(args) -> int:
    config = _load(args.file)
    dim = algebra_dimension(config)
    total = cartan_matrix(config).total()
    status = "ok" if dim == total else "MISMATCH"
    print(f"dim={dim} cartan_sum={total} {status}")
    return EXIT_OK if dim == total else EXIT_FAIL


def cmd_relations(args) -> int:
    sys.stdout.write(formats.relations_to_text(generate_relations(_load(args.file))))
    return EXIT_OK


def cmd_check(args) -> int:
    config = _load(args.file)
    closed, brute = cartan_matrix(config), oracle_cartan_matrix(config)
    diff = closed.first_difference(brute)
    if diff is None:
        print("ok")
        return EXIT_OK
    i, j, x, y = diff
    print(f"mismatch at ({closed.labels[i]},{closed.labels[j]}): formula={x} oracle={y}")
    return EXIT_FAIL


def cmd_fuzz(args) -> int:
    summary = run_fuzz(args.seed, args.count, args.bounds)
    print(summary)
    for name, seeds in summary.failures.items():
        if seeds:
            print(f"  {name} failed for seeds {seeds[:10]}")
    return EXIT_OK if summary.ok else EXIT_FAIL


def _bounds(text: str) -> tuple[int, int, int, int]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must be four integers, got {text!r}") from None
    if len(values) != 4 or min(values) < 1:
        raise argparse.ArgumentTypeError("bounds are VERTICES,POLYGONS,OCC,MU, each at least 1")
    return values


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-cartan",
        description="Quivers, relations and Cartan matrices of Brauer configuration algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the configuration axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quiver", help="print the induced quiver")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("cartan", help="print the Cartan matrix")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("dim", help="algebra dimension against the Cartan entry sum")
    p.add_argument("file")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("relations", help="list the relations by type")
    p.add_argument("file")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("check", help="compare the formula matrix with the path-enumeration oracle")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="check properties on random configurations")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--bounds", type=_bounds, default=(5, 5, 3, 3),
                   metavar="V,P,O,M", help="max vertices, polygons, occurrences, multiplicity")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigSyntaxError as exc:
        print(f"error: syntax: {args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SemanticError as exc:
        for v in exc.violations:
            print(f"error: {v.kind}: {v.location}: {v.message}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
