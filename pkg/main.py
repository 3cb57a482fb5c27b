#!/usr/bin/env python
import argparse
import asyncio
import sys
from typing import List, Optional

from app.config import config
from app.logger import define_log_level, logger
from app.schema import FUZZ_SUITE_VALUES, CechOp, ExitCode, OutputFormat, ProductMode
from app.tool import CechTool, FuzzTool, ProductTool, ToolResult


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--output",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Report format",
    )
    parent.add_argument(
        "--precision", type=int, default=15, help="Significant digits of float values"
    )
    parent.add_argument(
        "--log-level", default=config.log.level, help="Console log level (stderr)"
    )

    parser = argparse.ArgumentParser(
        prog="sparkring", description="Exact spark characters on the circle"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    product = commands.add_parser(
        "product", parents=[parent], help="Multiply two degree-0 spark classes"
    )
    product.add_argument("--lhs", required=True, help="Left spark JSON file")
    product.add_argument("--rhs", required=True, help="Right spark JSON file")
    product.add_argument(
        "--mode",
        choices=[m.value for m in ProductMode],
        default=ProductMode.ALL.value,
        help="Pipeline: closed, engine, deligne or all",
    )
    product.add_argument(
        "--check-oracle", action="store_true", help="Compare with quadrature"
    )
    product.add_argument(
        "--tol", type=float, default=config.oracle.tol, help="Oracle tolerance"
    )

    fuzz = commands.add_parser("fuzz", parents=[parent], help="Run a property suite")
    fuzz.add_argument("suite", choices=FUZZ_SUITE_VALUES, help="Suite name")
    fuzz.add_argument("--cases", type=int, default=config.fuzz.cases)
    fuzz.add_argument("--seed", type=int, default=config.fuzz.seed)

    cech = commands.add_parser("cech", parents=[parent], help="Čech operations on a nerve")
    cech.add_argument("op", choices=[op.value for op in CechOp], help="Operation")
    cech.add_argument("--nerve", required=True, help="Nerve JSON file")
    cech.add_argument(
        "--cochain",
        action="append",
        default=[],
        required=True,
        help="Cochain JSON file (repeatable, operand order)",
    )
    cech.add_argument("--cycle", help="Cycle JSON file for flat-product")

    return parser.parse_args(argv)


async def run(args: argparse.Namespace) -> ToolResult:
    if args.command == "product":
        return await ProductTool()(
            lhs=args.lhs,
            rhs=args.rhs,
            mode=args.mode,
            check_oracle=args.check_oracle,
            tol=args.tol,
        )
    if args.command == "fuzz":
        return await FuzzTool()(suite=args.suite, cases=args.cases, seed=args.seed)
    return await CechTool()(
        nerve=args.nerve, cochains=args.cochain, op=args.op, cycle=args.cycle
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit status."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return ExitCode.PARSE_ERROR.value if e.code else ExitCode.PASS.value
    define_log_level(args.log_level.upper(), config.log.file_level, "sparkring")

    try:
        result = asyncio.run(run(args))
    except KeyboardInterrupt:
        logger.info("Program interrupted by user")
        return 130

    print(result.render(args.output, args.precision))
    return result.exit_code.value


if __name__ == "__main__":
    sys.exit(main())
