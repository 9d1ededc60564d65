"""Command-line entry point."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from pgroupcount.cli.executor import EXIT_OK, EXIT_USAGE, SWEEP_FLAGS, CommandExecutor, exit_code_for
from pgroupcount.cli.render import render
from pgroupcount.common.config import OracleConfig, is_prime
from pgroupcount.common.errors import VerificationMismatch
from pgroupcount.common.serialization import error_report, serialize_many

logger = logging.getLogger(__name__)


def _prime(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from e
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not prime")
    return value


def _prime_list(text: str) -> list[int]:
    return [_prime(item) for item in text.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="format", action="store_const", const="json", help="One JSON document per line")
    output.add_argument("--csv", dest="format", action="store_const", const="csv", help="Comma-separated rows")
    common.add_argument(
        "--log-level",
        default=os.environ.get("PGROUPCOUNT_LOG_LEVEL", "WARNING"),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level for stderr",
    )
    common.add_argument("--save", metavar="FILE", help="Also write the records as a msgpack stream")
    common.set_defaults(format="table")

    evals = argparse.ArgumentParser(add_help=False)
    evals.add_argument("--eval", nargs="+", type=_prime, metavar="P", help="Evaluate the answer at these primes")

    parser = argparse.ArgumentParser(
        prog="pgroupcount", description="Count subgroups of finite abelian p-groups and sublattices of Z^s"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("pbinom", parents=[common, evals], help="Gaussian binomial binom(n, k)_p")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--expect", metavar="POLY", help="Exit 1 unless the answer equals this polynomial")

    sub = commands.add_parser("count", parents=[common, evals], help="Sublattices of Z^s with quotient of one type")
    sub.add_argument("--type", required=True, help="Padded partition such as 2,0")
    sub.add_argument("--s", type=int, help="Pad the type with zeros to this length")
    sub.add_argument("--r", type=int, help="Checked against the weight of the type")
    sub.add_argument("--t", type=int, default=1, help="Shift applied before conjugating (the count is unchanged)")
    sub.add_argument("--expect", metavar="POLY", help="Exit 1 unless the answer equals this polynomial")

    sub = commands.add_parser("count-all", parents=[common, evals], help="Coefficient table over every quotient type")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)

    sub = commands.add_parser("total", parents=[common, evals], help="All sublattices of Z^s of index p^r")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)

    sub = commands.add_parser("butler", parents=[common, evals], help="Subgroups of type mu in a group of type lambda")
    sub.add_argument("--lambda", dest="lam", required=True)
    sub.add_argument("--mu", required=True)

    sub = commands.add_parser("order-count", parents=[common, evals], help="Subgroups of order p^k")
    sub.add_argument("--lambda", dest="lam", required=True)
    sub.add_argument("--k", type=int, help="Omit to tabulate every k")

    sub = commands.add_parser("identity", parents=[common, evals], help="Partition sum equal to binom(n, k)_p")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--verify", action="store_true", help="Compare against binom(n, k)_p")
    sub.add_argument("--terms", action="store_true", help="List the term of every partition")

    sub = commands.add_parser("chain", parents=[common, evals], help="Chains of sublattices")
    which = sub.add_mutually_exclusive_group(required=True)
    which.add_argument("--types", help="Quotient types separated by ';', smallest first")
    which.add_argument("--indices", help="Increasing index exponents such as 1,2,3")
    sub.add_argument("--s", type=int, required=True)

    sub = commands.add_parser("oracle", parents=[common], help="Brute-force census of sublattices by quotient type")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--p", type=_prime, help="Defaults to the smallest configured prime")
    sub.add_argument("--compare", action="store_true", help="Compare each count with the closed form")

    sub = commands.add_parser("verify", parents=[common], help="Run the verification sweep")
    sub.add_argument("--primes", type=_prime_list, help="Comma-separated primes (default: PGROUPCOUNT_PRIMES or 2,3)")
    sub.add_argument("--bound", type=int, help="Size guard for exhaustive checks (default: PGROUPCOUNT_BOUND)")
    sub.add_argument("--jobs", type=int, help="Worker processes (default: PGROUPCOUNT_JOBS or 1)")
    for name in SWEEP_FLAGS:
        sub.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int)

    sub = commands.add_parser("show", parents=[common], help="Render records saved with --save")
    sub.add_argument("--file", required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Entry point for the pgroupcount command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        config = OracleConfig.from_env()
    except ValueError as e:
        print(json.dumps(error_report(e)), file=sys.stderr)
        return EXIT_USAGE

    response = CommandExecutor(config).handle_command(args.command, vars(args))
    if response["type"] == "error":
        report = {k: v for k, v in response.items() if k not in ("type", "exit_code")}
        print(json.dumps(report, ensure_ascii=False), file=sys.stderr)
        return response["exit_code"]

    text = render(response, args.format)
    if text:
        print(text)
    if args.save and response["records"]:
        Path(args.save).write_bytes(serialize_many(response["records"]))
        logger.info(f"Saved {len(response['records'])} records to {args.save}")

    if response.get("diff"):
        mismatch = VerificationMismatch(f"{args.command} found a mismatch", diff=response["diff"])
        print(json.dumps(error_report(mismatch), ensure_ascii=False), file=sys.stderr)
        return exit_code_for(mismatch)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
