import argparse
import logging
import sys
from typing import Optional

from fsspec.core import url_to_fs

from graphcx.chainspace import DEFAULT_CAPS, BasisStore, enumerate_basis, trivalent_bound
from graphcx.errors import GraphComplexError, PreconditionError
from graphcx.homology import HomologyRow, boundary_matrix, homology_table

from . import suite
from .config import FORMATS, RunConfig
from .output import format_classes, format_report, format_table, read_input, write_output

logger = logging.getLogger(__name__)


def _common(parser: argparse.ArgumentParser, fmt: str = "text") -> None:
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--out", help="fsspec URL to write to (default: stdout)")
    parser.add_argument("--format", choices=FORMATS, default=fmt)
    parser.add_argument("--jobs", "-j", type=int, help="worker threads")
    parser.add_argument("--cache", help="fsspec URL of a basis cache")
    parser.add_argument("--max-loops", type=int, default=DEFAULT_CAPS.max_loop_degree)
    parser.add_argument("--max-vertices", type=int, default=DEFAULT_CAPS.max_vertices)
    parser.add_argument("--max-classes", type=int, default=DEFAULT_CAPS.max_classes)
    parser.add_argument(
        "--prime", dest="primes", type=int, action="append",
        help="rank probe prime (repeatable)",
    )


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcx", description="Exact computations in the commutative graph complex."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    enum = commands.add_parser("enumerate", help="list basis classes")
    enum.add_argument("--loop", required=True, help="loop degree or range L-M")
    enum.add_argument("--vertices", type=int)
    enum.add_argument("--connected", action="store_true")
    enum.add_argument("--one-pi", action="store_true")
    _common(enum)

    homology = commands.add_parser("homology", help="Betti numbers of ∂_E")
    homology.add_argument("--loop", required=True, help="loop degree or range L-M")
    homology.add_argument("--connected", action="store_true")
    homology.add_argument("--one-pi", action="store_true")
    _common(homology)

    matrix = commands.add_parser("matrix", help="boundary matrix in coordinate format")
    matrix.add_argument("--op", choices=("E", "H"), default="E")
    matrix.add_argument("--loop", required=True)
    matrix.add_argument("--from", dest="from_vertices", type=int, required=True)
    matrix.add_argument("--connected", action="store_true")
    _common(matrix)

    verify = commands.add_parser("verify", help="run the identity suite")
    verify.add_argument("--loop", default="2-4")
    verify.add_argument("--only", action="append", metavar="NAME")
    verify.add_argument("--one-pi", action="store_true")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--exhaustive-limit", type=int, default=64)
    verify.add_argument(
        "--exhaustive-loops", type=int, default=3,
        help="tuples within this loop degree are not sampled",
    )
    verify.add_argument("--replay", metavar="URL")
    _common(verify, fmt="json")
    return parser


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _store(config: RunConfig) -> Optional[BasisStore]:
    if config.cache is None:
        return None
    fs, path = url_to_fs(config.cache)
    return BasisStore(fs, path)


def cmd_enumerate(config: RunConfig) -> int:
    store = _store(config)
    classes = []
    for b in config.loops:
        if config.vertices is not None:
            counts = [config.vertices]
        else:
            counts = range(1, min(trivalent_bound(b), config.caps.max_vertices) + 1)
        for v in counts:
            classes.extend(
                enumerate_basis(
                    v, b, config.connected, config.one_pi, caps=config.caps, store=store
                )
            )
    write_output(format_classes(classes, config.fmt), config.out)
    return 0


def cmd_homology(config: RunConfig) -> int:
    rows = homology_table(
        config.loops,
        config.caps,
        config.connected,
        config.one_pi,
        primes=config.primes,
        jobs=config.jobs,
        store=_store(config),
    )
    write_output(format_table(HomologyRow._fields, rows, config.fmt), config.out)
    return 0


def cmd_matrix(config: RunConfig) -> int:
    if len(config.loops) != 1:
        raise PreconditionError("matrix takes a single loop degree")
    matrix = boundary_matrix(
        config.op,
        config.max_loops,
        config.from_vertices,
        config.connected,
        caps=config.caps,
        jobs=config.jobs,
        store=_store(config),
    )
    write_output(matrix.to_text(), config.out)
    return 0


def cmd_verify(config: RunConfig) -> int:
    if config.replay:
        report = suite.replay(config, read_input(config.replay))
    else:
        report = suite.run_suite(config)
    write_output(format_report(report, config.fmt), config.out)
    failed = [e["identity"] for e in report["entries"] if not e["passed"]]
    if failed:
        logger.warning("failing checks: %s", ", ".join(sorted(set(failed))))
        return 1
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "homology": cmd_homology,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = get_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[config.command](config)
    except GraphComplexError as exc:
        print(f"graphcx: error: {exc}", file=sys.stderr)  # noqa: T201
        return 2
