#!/usr/bin/env python3
"""
GCX command line
Build complexes, run the categorical constructions and check group-theoretic claims.

Exit codes: 0 success, 1 domain error (one ``error: <code>: <message>`` line on stderr),
2 usage error.
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from src.builders import build_family, coxeter_matrix_of, parse_family
from src.category_ops import coequalizer, disjoint_union, equalizer, strong_product
from src.config import LOG_LEVELS, GCXConfig, load_config
from src.core.complex import one_skeleton, validate
from src.core.quotient import QuotientMode
from src.core.weights import format_weight
from src.coset_table import coset_enumerate
from src.document import (
    is_canonical,
    load_complex,
    load_morphism_map,
    parse,
    read_text,
    save_complex,
)
from src.exceptions import DocumentError, GCXError, error_line, handle_error
from src.group_verify import verify_homomorphism, vertex_generator_map
from src.logging_debug import setup_logging
from src.morphism import extend_from_vertex_map
from src.presentation import EXPORT_FORMATS, abelianization_rank, export, presentation_of


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {raw}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcx", description="Weighted 2-complexes and generalized Coxeter groups")
    parser.add_argument("--config", metavar="PATH", help="TOML config file with a [gcx] table")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, metavar="LEVEL",
                        help="Log level for stderr: " + ", ".join(LOG_LEVELS) + " (default: WARNING)")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    p = commands.add_parser("validate", help="Check every axiom of a complex document")
    p.add_argument("file")
    p.add_argument("--lax", action="store_true", help="Do not require canonical serialization")

    p = commands.add_parser("present", help="Print the generalized Coxeter presentation")
    p.add_argument("file")
    p.add_argument("--format", choices=sorted(EXPORT_FORMATS), default="native")

    p = commands.add_parser("order", help="Group order by coset enumeration")
    p.add_argument("file")
    p.add_argument("--limit", type=_positive_int, help="Maximum live cosets")

    p = commands.add_parser("abelianize", help="Rank d of the abelianization (Z2)^d")
    p.add_argument("file")

    p = commands.add_parser("build", help="Build a family complex")
    p.add_argument("family", nargs="+", help="FAMILY [ARGS...], e.g. dihedral 4, gnk 4 2")
    p.add_argument("-o", "--output", required=True)

    p = commands.add_parser("op", help="Categorical constructions")
    p.add_argument("operation", choices=["union", "product", "equalize", "coequalize"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--phi", metavar="MAP")
    p.add_argument("--psi", metavar="MAP")
    p.add_argument("--lax", action="store_true", help="Collapse degeneracies instead of failing")
    p.add_argument("-o", "--output", required=True)

    p = commands.add_parser("hom-check", help="Check that a vertex map induces a homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True, metavar="MAP")
    p.add_argument("--limit", type=_positive_int, help="Maximum live cosets for the target")

    p = commands.add_parser("matrix", help="Coxeter matrix of a weighted graph")
    p.add_argument("file")

    p = commands.add_parser("skeleton", help="Weighted graph underlying a complex")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)

    return parser


def _validate(args, config: GCXConfig) -> int:
    text = read_text(args.file)
    complex_ = parse(text, check=False)
    report = validate(complex_)
    if not report.ok:
        for line in report.lines():
            print(line)
        return 1
    if not args.lax and not is_canonical(text, complex_):
        print(error_line(DocumentError(f"{args.file} is not in canonical form")), file=sys.stderr)
        return 1
    print("ok")
    return 0


def _present(args, config: GCXConfig) -> int:
    print(export(presentation_of(load_complex(args.file)), args.format))
    return 0


def _order(args, config: GCXConfig) -> int:
    limit = args.limit or config.coset_limit
    result = coset_enumerate(presentation_of(load_complex(args.file)), limit, config.coset_definition_factor)
    print(result.require_order())
    return 0


def _abelianize(args, config: GCXConfig) -> int:
    print(f"rank {abelianization_rank(presentation_of(load_complex(args.file)))}")
    return 0


def _build(args, config: GCXConfig) -> int:
    save_complex(args.output, build_family(parse_family(args.family)))
    return 0


def _op(args, config: GCXConfig) -> int:
    a, b = load_complex(args.a), load_complex(args.b)
    if args.operation == "union":
        result = disjoint_union([a, b])
    elif args.operation == "product":
        result = strong_product([a, b])
    else:
        phi = extend_from_vertex_map(a, b, load_morphism_map(read_text(args.phi)))
        psi = extend_from_vertex_map(a, b, load_morphism_map(read_text(args.psi)))
        if args.operation == "equalize":
            result = equalizer(phi, psi)
        else:
            result = coequalizer(phi, psi, QuotientMode.LAX if args.lax else QuotientMode.STRICT)
    save_complex(args.output, result.object)
    return 0


def _hom_check(args, config: GCXConfig) -> int:
    source_p = presentation_of(load_complex(args.source))
    target_p = presentation_of(load_complex(args.target))
    genmap = vertex_generator_map(load_morphism_map(read_text(args.map)), source_p, target_p)
    limit = args.limit or config.coset_limit
    table = coset_enumerate(target_p, limit, config.coset_definition_factor).require_table()
    ok = verify_homomorphism(genmap, source_p, table)
    print("true" if ok else "false")
    return 0


def _matrix(args, config: GCXConfig) -> int:
    matrix = coxeter_matrix_of(load_complex(args.file))
    print(json.dumps([[format_weight(w) for w in row] for row in matrix], separators=(",", ":")))
    return 0


def _skeleton(args, config: GCXConfig) -> int:
    save_complex(args.output, one_skeleton(load_complex(args.file)))
    return 0


COMMANDS: Dict[str, Callable[..., int]] = {
    "validate": _validate,
    "present": _present,
    "order": _order,
    "abelianize": _abelianize,
    "build": _build,
    "op": _op,
    "hom-check": _hom_check,
    "matrix": _matrix,
    "skeleton": _skeleton,
}


def cli_run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.command == "op" and args.operation in ("equalize", "coequalize") and not (args.phi and args.psi):
        print(f"gcx op: error: {args.operation} needs --phi and --psi", file=sys.stderr)
        return 2

    try:
        config = load_config(args.config).with_overrides(log_level=args.log_level)
        setup_logging(config.log_level, config.log_pretty, config.log_file)
        return COMMANDS[args.command](args, config)
    except GCXError as e:
        handle_error(e, args.command, "debug")
        print(error_line(e), file=sys.stderr)
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    return cli_run(argv)


if __name__ == "__main__":
    sys.exit(main())
