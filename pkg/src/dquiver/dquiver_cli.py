#!/usr/bin/env python3

# https://pymotw.com/3/argparse/
# https://docs.python.org/3/library/argparse.html#sub-commands

import sys
import argparse
import logging
import pprint
import random

from typing import List, Optional

from dquiver.const import (DEFAULT_MAX_ORBITS, DEFAULT_PRIME, DEFAULT_SAMPLES, DEFAULT_SEED,
                           EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION)
from dquiver.error import DQuiverError, FieldError
from dquiver.field import QQ, Field, PrimeField, parse_field
from dquiver.grassmann import compare_grassmann, grassmann_representation
from dquiver.orbit_poset import compare_orbits, hasse, hasse_oracle
from dquiver.quiver import act, dynkin_type, positive_roots, random_group_element
from dquiver.serialize import dumps, read_dims, read_matrix, read_quiver_spec, read_rep_spec
from dquiver.star import build_star, embed_typeD, star_extend
from dquiver.tables import verify_tables
from dquiver.zigzag import signature


_pp = pprint.PrettyPrinter(indent=4)

_log = logging.getLogger(__name__)


def _get_version():
    """Resolve the version of this tool"""

    from dquiver.__version__ import __version__
    return __version__


# Pycharm debug server
_HOST, _PORT = 'localhost', 40129
_version = _get_version()


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field_arg(text: str) -> Field:
    try:
        return parse_field(text)
    except FieldError as e:
        raise argparse.ArgumentTypeError(str(e))


def _init_argparser_debug():

    parser = argparse.ArgumentParser(add_help=False)

    group = parser.add_argument_group("debug")

    group.add_argument(
        "-v", "--verbose", dest="verbose", action="count", default=0,
        help="set logging level to 'debug'"
    )
    group.add_argument(
        "-d", "--debug", dest="debug", action="store_true", default=False,
        help="enable 'pycharm' debugger"
    )

    group.add_argument(
        "--host", dest="debugger_host", default=None,
        help="set 'host' for debug server", type=str
    )

    group.add_argument(
        "--port", dest="debugger_port", default=None,
        help="set 'port' for debug server", type=int
    )

    return parser


def _add_oracle(parser: argparse.ArgumentParser, what: str):
    parser.add_argument(
        "--oracle", action="store_true", default=False,
        help=f"cross-check {what} with Hom dimensions against the indecomposables"
    )


def init_argparse() -> argparse.ArgumentParser:

    parser = _ArgumentParser(
        prog='dquiver',
        parents=[_init_argparser_debug()],
        usage="dquiver [OPTION]... COMMAND [ARG]...",
        description="Orbits and degenerations of type D quiver representations."
    )

    parser.add_argument(
        "--version", action="version",
        version=f"'dquiver' version {_version}"
    )

    parser.add_argument(
        "--field", default=None, type=_field_arg,
        help=f"'Q' or 'GF:p'; overrides the field named in input files "
             f"(default Q, GF:{DEFAULT_PRIME} for verify-tables)"
    )
    parser.add_argument(
        "--seed", default=DEFAULT_SEED, type=int,
        help="seed of every random choice"
    )

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    cmd = commands.add_parser('signature', help="rank signature of a representation")
    cmd.add_argument('rep', type=str, help='representation spec (json)')
    cmd.add_argument(
        "--act-random-seed", dest="act_random_seed", default=None, type=int,
        help="act on the representation by a random group element first"
    )
    cmd.set_defaults(func=_cmd_signature)

    cmd = commands.add_parser('order', help="compare the orbits of two representations")
    cmd.add_argument('first', type=str, help='representation spec (json)')
    cmd.add_argument('second', type=str, help='representation spec (json)')
    _add_oracle(cmd, "the verdict")
    cmd.set_defaults(func=_cmd_order)

    cmd = commands.add_parser('poset', help="degeneration poset of a dimension vector")
    cmd.add_argument('quiver', type=str, help='quiver spec with a dimension vector (json)')
    fmt = cmd.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="dot", action="store_true", default=False, help="emit graphviz DOT")
    fmt.add_argument("--json", dest="dot", action="store_false", default=False, help="emit json (default)")
    cmd.add_argument("--max-orbits", dest="max_orbits", default=DEFAULT_MAX_ORBITS, type=int,
                     help="refuse dimension vectors with more orbits")
    _add_oracle(cmd, "every Hasse edge")
    cmd.set_defaults(func=_cmd_poset)

    cmd = commands.add_parser(
        'verify-tables', help="classify the slice functions of the star quiver",
        description=f"Sample the slice functions of the star quiver over GF:{DEFAULT_PRIME} unless --field is given."
    )
    cmd.add_argument("--n", dest="n", default=2, type=int, choices=(1, 2, 3))
    cmd.add_argument("--dims", default='random', type=str,
                     help="'random' or a json list of dimension vectors on the star quiver")
    cmd.add_argument("--samples", default=DEFAULT_SAMPLES, type=int, help="samples per dimension vector")
    cmd.add_argument("--json", dest="json", action="store_true", default=False, help="emit json")
    cmd.set_defaults(func=_cmd_verify_tables)

    cmd = commands.add_parser('grassmann', help="compare two points of a double flag variety")
    cmd.add_argument('first', nargs=3, metavar=('M', 'N', 'FLAG'), help='matrix files (json)')
    cmd.add_argument('second', nargs=3, metavar=('M2', 'N2', 'FLAG2'), help='matrix files (json)')
    _add_oracle(cmd, "the verdict")
    cmd.set_defaults(func=_cmd_grassmann)

    cmd = commands.add_parser('roots', help="positive roots of a Dynkin quiver")
    cmd.add_argument('quiver', type=str, help='quiver spec (json)')
    cmd.set_defaults(func=_cmd_roots)

    cmd = commands.add_parser('embed', help="star quiver embedding of a type D quiver")
    cmd.add_argument('quiver', type=str, help='quiver spec with a dimension vector (json)')
    cmd.set_defaults(func=_cmd_embed)

    return parser


def _setup_log_verbosity(verbosity: int):

    if verbosity >= 1:
        logging.basicConfig(level=logging.DEBUG)
        _log.debug("logging level set to DEBUG")


def _enable_debug(host: str, port: int):

    import pydevd_pycharm

    pydevd_pycharm.settrace(host=host, port=port, stdoutToServer=True, stderrToServer=True)
    _log.debug(f"pydevd enabled - host: '{host}', port: '{port}'")


def _verdict_code(agree: bool) -> int:
    return EXIT_OK if agree else EXIT_DISAGREE


def _cmd_signature(args: argparse.Namespace) -> int:

    v = read_rep_spec(args.rep, args.field)

    if args.act_random_seed is not None:
        g = random_group_element(v.quiver, v.dim, random.Random(args.act_random_seed), v.field)
        v = act(v, g)

    e = embed_typeD(v.quiver, v.dim)
    print(dumps(signature(star_extend(v, e)).to_json()), file=sys.stdout)

    return EXIT_OK


def _cmd_order(args: argparse.Namespace) -> int:

    v = read_rep_spec(args.first, args.field)
    w = read_rep_spec(args.second, args.field)

    verdict = compare_orbits(v, w, oracle=args.oracle, seed=args.seed)
    print(dumps(verdict.to_json()), file=sys.stdout)

    return _verdict_code(verdict.agree)


def _cmd_poset(args: argparse.Namespace) -> int:

    spec = read_quiver_spec(args.quiver, args.field)
    d = spec.require_dim(args.quiver)

    poset = hasse(spec.quiver, d, max_orbits=args.max_orbits, seed=args.seed, field=spec.field)
    print(poset.to_dot() if args.dot else dumps(poset.to_json()), file=sys.stdout)

    if not args.oracle:
        return EXIT_OK

    oracle = hasse_oracle(spec.quiver, d, max_orbits=args.max_orbits, seed=args.seed, field=spec.field)
    for edge in sorted(set(poset.edge_labels()) ^ set(oracle.edge_labels())):
        _log.error(f"Hasse edge {edge[0]} -> {edge[1]} found by only one criterion")

    return _verdict_code(poset.edges == oracle.edges)


def _cmd_verify_tables(args: argparse.Namespace) -> int:

    field = PrimeField(DEFAULT_PRIME) if args.field is None else args.field
    dims = None if args.dims == 'random' else read_dims(args.dims, build_star(args.n).quiver)

    report = verify_tables(args.n, dims, samples=args.samples, seed=args.seed, field=field)
    print(dumps(report.to_json()) if args.json else report.to_text(), file=sys.stdout)

    return _verdict_code(report.ok)


def _cmd_grassmann(args: argparse.Namespace) -> int:

    field = QQ if args.field is None else args.field

    points = []
    for m, nm, flag in (args.first, args.second):
        points.append(grassmann_representation(
            read_matrix(m, field), read_matrix(nm, field), read_matrix(flag, field)
        ))

    verdict = compare_grassmann(*points, oracle=args.oracle, seed=args.seed)
    print(dumps(verdict.to_json()), file=sys.stdout)

    return _verdict_code(verdict.agree)


def _cmd_roots(args: argparse.Namespace) -> int:

    q = read_quiver_spec(args.quiver, args.field).quiver
    kind, m = dynkin_type(q)

    roots = [r.as_dict() for r in positive_roots(q)]
    print(dumps({'type': f'{kind}{m}', 'roots': roots}), file=sys.stdout)

    return EXIT_OK


def _cmd_embed(args: argparse.Namespace) -> int:

    spec = read_quiver_spec(args.quiver, args.field)
    e = embed_typeD(spec.quiver, spec.require_dim(args.quiver))
    print(dumps(e.to_json()), file=sys.stdout)

    return EXIT_OK


def _run(args: argparse.Namespace) -> int:
    _log.debug(f"running '{args.command}'")
    return args.func(args)


def main(args: argparse.Namespace) -> Optional[int]:

    if args.verbose:
        verbosity_level = args.verbose
        _setup_log_verbosity(verbosity_level)
    else:
        logging.basicConfig(level=logging.INFO)

    _log.debug("args: %s", _pp.pformat(args.__dict__))

    if args.debug:
        host = args.debugger_host or _HOST
        port = args.debugger_port or _PORT
        _enable_debug(host, port)

    try:
        return _run(args)
    except DQuiverError as e:
        _log.error(f"{type(e).__name__}: {e}")
        return EXIT_VALIDATION


def run(argv: List[str] = None) -> Optional[int]:
    parser = init_argparse()
    return main(parser.parse_args(argv))


if __name__ == '__main__':

    sys.exit(run())
