#!/usr/bin/env python
"""
Command line front end.

    slnweb eval two_circles.txt
    slnweb rt unknot.txt
    slnweb compile-braid --n 3 --colors 1,2 --word "1 1" > hopf.txt

Results go to stdout, one value per line; diagnostics go to stderr. Exit codes:
0 success (and "dual canonical"), 1 "not dual canonical", 2 parse error,
3 semantic error, 4 resource limit.
"""

import json
import sys
from argparse import ArgumentParser, Namespace
from contextlib import nullcontext
from pathlib import Path

from pydantic import ValidationError

from slnweb_models import EngineConfig

from .canonical import canonical_tableau, dual_canonical_report
from .evaluation import ev, ev_by_shape, glued_evaluation, kuperberg_pair, tensor_expansion
from .exceptions import ArgumentParseError, ParseError, ResourceError, SemanticError
from .links import compile_braid_closure, ev_link, rt
from .logging import debug_logging, get_logger, verbosity_level
from .qlaurent import render
from .tableaux import bkw_degree
from .textformat import parse_fprogram, parse_link_program, render_program
from .version import __version__
from .webs import render_state_string

logger = get_logger(__name__.split('.')[-1])

EXIT_NOT_DUAL_CANONICAL = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_RESOURCE = 4


def _read(path: str) -> str:
    return Path(path).read_text()


def _config(args: Namespace) -> EngineConfig:
    config = EngineConfig.from_json_file(args.config) if args.config else EngineConfig()
    overrides = {}
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.max_states is not None:
        overrides["max_states"] = args.max_states
    return EngineConfig(**{**config.to_dict(), **overrides})


def _cmd_eval(args, config, out):
    print(render(ev(parse_fprogram(_read(args.program)), config)), file=out)


def _cmd_shapes(args, config, out):
    shapes = ev_by_shape(parse_fprogram(_read(args.program)), config)
    for text, poly in sorted((shape.text(), poly) for shape, poly in shapes.items()):
        print(f"{text}\t{render(poly)}", file=out)


def _cmd_flows(args, config, out):
    expansion = tensor_expansion(parse_fprogram(_read(args.program)), config)
    rows = sorted((render_state_string(state), poly) for state, poly in expansion.items())
    for text, poly in rows:
        print(f"{text}\t{render(poly)}", file=out)


def _cmd_canonical(args, config, out):
    tableau = canonical_tableau(parse_fprogram(_read(args.program)))
    print(tableau.text(), file=out)
    print(f"degree {bkw_degree(tableau)}", file=out)


def _cmd_dual_canonical(args, config, out):
    report = dual_canonical_report(parse_fprogram(_read(args.program)), config)
    print(report.explanation(), file=out)
    return 0 if report.is_dual_canonical else EXIT_NOT_DUAL_CANONICAL


def _cmd_pair(args, config, out):
    u, v = parse_fprogram(_read(args.first)), parse_fprogram(_read(args.second))
    value = glued_evaluation(u, v, config) if args.glued else kuperberg_pair(u, v, config)
    print(render(value), file=out)


def _cmd_link(args, config, out):
    print(render(ev_link(parse_link_program(_read(args.program)), config)), file=out)


def _cmd_rt(args, config, out):
    print(render(rt(parse_link_program(_read(args.program)), config)), file=out)


def _int_list(text: str, sep: str | None, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(sep) if tok.strip()]
    except ValueError:
        raise ArgumentParseError(f"cannot read {what} {text!r}") from None


def _cmd_compile_braid(args, config, out):
    colors = _int_list(args.colors, ",", "colors")
    word = _int_list(args.word, None, "word")
    print(render_program(compile_braid_closure(args.n, colors, word)), end="", file=out)


def _build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="slnweb", description="Evaluate sl_n webs and colored links")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    shared = ArgumentParser(add_help=False)
    shared.add_argument("--jobs", type=int, default=None, help="Worker processes per DP step")
    shared.add_argument("--max-states", type=int, default=None, help="Live shape guard")
    shared.add_argument("--config", default=None, help="JSON file with engine settings")
    shared.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr (-v info, -vv debug)")

    sub = parser.add_subparsers(dest="verb", required=True)

    def single(name, handler, help_text):
        cmd = sub.add_parser(name, parents=[shared], help=help_text)
        cmd.add_argument("program", help="Program file")
        cmd.set_defaults(handler=handler)
        return cmd

    single("eval", _cmd_eval, "Evaluate an F-program")
    single("shapes", _cmd_shapes, "Per-shape evaluation polynomials")
    single("flows", _cmd_flows, "Boundary states with their tensor coefficients")
    single("canonical", _cmd_canonical, "Canonical tableau and its degree")
    single("dual-canonical", _cmd_dual_canonical, "Dual canonical test (exit 0 yes, 1 no)")
    single("link", _cmd_link, "Unnormalized colored link polynomial")
    single("rt", _cmd_rt, "Normalized colored link polynomial")

    pair = sub.add_parser("pair", parents=[shared], help="Kuperberg pairing of two programs")
    pair.add_argument("first", help="Program file")
    pair.add_argument("second", help="Program file")
    pair.add_argument("--glued", action="store_true", help="Print q^-d times the pairing")
    pair.set_defaults(handler=_cmd_pair)

    braid = sub.add_parser("compile-braid", parents=[shared], help="Link program of a braid closure")
    braid.add_argument("--n", type=int, required=True, help="Rank parameter of sl_n")
    braid.add_argument("--colors", required=True, help="Strand colors, e.g. 1,2")
    braid.add_argument("--word", default="", help="Signed generators, e.g. '1 -2 1'")
    braid.set_defaults(handler=_cmd_compile_braid)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    args = _build_parser().parse_args(argv)
    out = out or sys.stdout
    logs = debug_logging(verbosity_level(args.verbose)) if args.verbose else nullcontext()
    try:
        with logs:
            config = _config(args)
            logger.info(f"{args.verb} with jobs={config.jobs}, max_states={config.max_states}")
            return args.handler(args, config, out) or 0
    except (ParseError, ValidationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
