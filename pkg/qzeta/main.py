import argparse
import json
import os
import sys
from pprint import pformat

from qzeta import LOGGER
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.json_interpreter import JsonInterpreter
from qzeta.commons.timer import Timer

AVAILABLE_TOOLS = ['expand', 'series', 'verify', 'limit']
EXIT_USAGE = 2
EXIT_FAILED = 1

# command line flag -> configuration key
FLAGS = {"product": "product", "word": "word", "order": "order", "pathway": "pathway", "model": "model",
         "q0": "q0", "term_cap": "term_cap", "tol": "tol", "suite": "suite", "max_depth": "max_depth",
         "range": "range", "seed": "seed", "samples": "samples", "format": "format"}
# options whose value may start with a minus sign, e.g. --range -2..3 or --q0 -1/2
SIGNED_VALUE_OPTIONS = ("--range", "--q0")


def build_parser():
    parser = argparse.ArgumentParser(prog="qzeta", description="double q-shuffle computations on q-multiple zeta"
                                                                " values")
    parser.add_argument("tool", help="command to be launched", choices=AVAILABLE_TOOLS)
    parser.add_argument("words", nargs="*", help="the two factors of expand")
    parser.add_argument("-c", "--config", action='store', type=str, help="json configuration file")
    parser.add_argument("-v", "--verbosity", action="store_true", help="increase output verbosity", default=0)
    parser.add_argument("--product", help="shuffle, quasi, qshuffle, qquasi, qshuffle-graded or qquasi-graded")
    parser.add_argument("--word", help="z(n1,...) or a p/d/y word")
    parser.add_argument("--order", type=int, help="truncation degree of series")
    parser.add_argument("--pathway", choices=["sum", "jackson", "both"])
    parser.add_argument("--model", choices=["modified", "nonmodified", "schlesinger"])
    parser.add_argument("--q0", help="evaluation point, p/q for exact arithmetic or a decimal")
    parser.add_argument("--term-cap", dest="term_cap", type=int, help="largest outer index of numeric sums")
    parser.add_argument("--tol", type=float, help="tolerance of the limit checks")
    parser.add_argument("--suite", help="verification suite")
    parser.add_argument("--max-depth", dest="max_depth", type=int, help="largest depth of the desk word set")
    parser.add_argument("--range", help="exponent range lo..hi of the desk word set")
    parser.add_argument("--seed", type=int, help="seed of the random draws")
    parser.add_argument("--samples", type=int, help="random operator pairs per (a, b) of the operator-laws suite")
    parser.add_argument("--format", choices=["text", "json"])
    return parser


def attach_signed_values(argv):
    """
    "--range -2..3" becomes "--range=-2..3" so that argparse does not read a
    negative value as an option
    """
    attached, pending = [], None
    for token in argv:
        if pending is not None:
            attached.append(f"{pending}={token}")
            pending = None
        elif token in SIGNED_VALUE_OPTIONS:
            pending = token
        else:
            attached.append(token)
    if pending is not None:
        attached.append(pending)
    return attached


def parse_arguments(argv=None):
    """
    parse arguments, lay the explicit flags over the optional configuration
    file and validate the result against the tool schema

    Returns
    -------
    tool, conf, verbosity
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_intermixed_args(attach_signed_values(argv))
    schema_path = os.path.join(os.path.dirname(__file__), *["scripts", "json_defaults", f"{args.tool}_schema.json"])
    with open(schema_path) as schema_file:
        schema = json.load(schema_file)

    if args.config is not None:
        if not os.path.exists(args.config):
            raise QZetaError(ErrorCodes.ERR_IO, f"config file {args.config} not found (check path)")
        with open(args.config, 'r') as json_file:
            json_dict = JsonInterpreter(json_file, args.config)
    else:
        json_dict = JsonInterpreter({})

    json_dict.update({key: getattr(args, flag) for flag, key in FLAGS.items()})
    if args.words:
        json_dict.update({"words": args.words})
    if not json_dict.is_valid(schema):
        raise QZetaError(ErrorCodes.ERR_JSON_SCHEMA_ERROR, f"invalid configuration for {args.tool}")
    return args.tool, json_dict.get_dict(), args.verbosity


def build_tool(tool, conf):
    if tool == "expand":
        from qzeta.scripts.expand import Expand
        return Expand(**conf)
    if tool == "series":
        from qzeta.scripts.series import Series
        return Series(**conf)
    if tool == "verify":
        from qzeta.scripts.verify import Verify
        return Verify(**conf)
    from qzeta.scripts.limit import Limit
    return Limit(**conf)


def main(argv=None):
    """
    Entry point; returns the exit code: 0 on success, 1 when a check failed,
    2 on a usage error
    """
    try:
        tool, conf, verbosity = parse_arguments(argv)
    except SystemExit as exit_:
        return exit_.code
    except QZetaError as error:
        LOGGER.error(error.message)
        return EXIT_USAGE

    LOGGER.setLevel('DEBUG' if verbosity else 'INFO')
    LOGGER.debug(f"Loaded configuration: \n{pformat(conf, indent=4)}")

    with Timer(tool.capitalize()):
        try:
            text, status = build_tool(tool, conf)()
        except QZetaError as error:
            LOGGER.error(error)
            return EXIT_USAGE if error.error_code.is_usage_error else EXIT_FAILED
    print(text)
    return status


if __name__ == '__main__':

    sys.exit(main())
