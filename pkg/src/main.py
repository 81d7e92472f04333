"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: main.py                                                               │
│ Developed by: Davidson Gomes                                                 │
│ Creation date: October 18, 2026                                              │
│ Contact: contato@evolution-api.com                                           │
├──────────────────────────────────────────────────────────────────────────────┤
│ @copyright © Evolution API 2025. All rights reserved.                        │
│ Licensed under the Apache License, Version 2.0                               │
│                                                                              │
│ You may not use this file except in compliance with the License.             │
│ You may obtain a copy of the License at                                      │
│                                                                              │
│    http://www.apache.org/licenses/LICENSE-2.0                                │
│                                                                              │
│ Unless required by applicable law or agreed to in writing, software          │
│ distributed under the License is distributed on an "AS IS" BASIS,            │
│ WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.     │
│ See the License for the specific language governing permissions and          │
│ limitations under the License.                                               │
├──────────────────────────────────────────────────────────────────────────────┤
│ @important                                                                   │
│ For any future changes to the code in this file, it is recommended to        │
│ include, together with the modification, the information of the developer    │
│ who changed it and the date of modification.                                 │
└──────────────────────────────────────────────────────────────────────────────┘
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.cli import (
    flows_commands,
    katetov_commands,
    metric_commands,
    roelcke_commands,
    suite_commands,
    syndetic_commands,
)
from src.cli.router import common_options
from src.config.settings import settings
from src.core.exceptions import (
    BaseLabException,
    InternalConsistencyError,
    InvalidInputFileError,
    UsageError,
)
from src.schemas.report import RunReport, certificate
from src.services import io_service
from src.utils.logger import setup_logger

# Services log under "src.*"; one handler on the package logger serves them all
setup_logger("src")
logger = logging.getLogger(__name__)

routers = [
    metric_commands.router,
    katetov_commands.router,
    roelcke_commands.router,
    flows_commands.router,
    syndetic_commands.router,
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urysohn-lab",
        description=settings.PROJECT_DESCRIPTION,
    )
    parser.add_argument(
        "--version", action="version", version=settings.PROJECT_VERSION
    )
    subparsers = parser.add_subparsers(dest="group", metavar="<group>")
    subparsers.required = True
    common = common_options()
    for router in routers:
        router.register(subparsers, common)
    suite_commands.register(subparsers, common)
    return parser


def _summary(report: RunReport) -> str:
    passed = sum(1 for c in report.certificates if c.passed)
    verdict = {0: "pass", 1: "fail"}.get(report.exit_code, "error")
    return (
        f"{report.command}: {verdict} "
        f"({passed}/{len(report.certificates)} certificates passed)"
    )


def _emit(report: RunReport, args: argparse.Namespace) -> int:
    if args.out_path:
        io_service.write_report(report, args.out_path, args.format)
    print(_summary(report))
    return report.exit_code


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command, write the report and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage text
        return e.code if isinstance(e.code, int) else 2

    inputs = {"in": args.in_path, "in2": args.in2_path}
    try:
        outcome = args.handler(args)
        digests = io_service.input_digests(inputs)
    except (InvalidInputFileError, UsageError) as e:
        logger.error(e.message)
        if isinstance(e, UsageError):
            parser.print_usage(sys.stderr)
        print(f"{args.command}: error: {e.message}", file=sys.stderr)
        return 2
    except InternalConsistencyError as e:
        logger.error(f"Internal consistency failure: {e.message}")
        report = RunReport(
            schema=settings.REPORT_SCHEMA_VERSION,
            command=args.command,
            result=e.to_dict(),
            certificates=[certificate("internal_consistency", False)],
            exit_code=1,
        )
        return _emit(report, args)
    except BaseLabException as e:
        # the input parsed but the operation rejects it
        logger.error(f"{e.error_code}: {e.message}")
        print(f"{args.command}: error: {e.message}", file=sys.stderr)
        return 2

    failed = any(not c.passed for c in outcome.certificates)
    report = RunReport(
        schema=settings.REPORT_SCHEMA_VERSION,
        command=args.command,
        inputs=digests,
        result=outcome.result,
        certificates=outcome.certificates,
        exit_code=1 if failed else 0,
    )
    return _emit(report, args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
