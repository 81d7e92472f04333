"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: router.py                                                             │
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

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional
import logging

from src.config.settings import settings
from src.core.exceptions import UsageError
from src.schemas.report import Certificate
from src.services.io_service import REPORT_FORMATS
from src.utils.rational import to_rational

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """What a command hands back to the entry point for the report"""

    result: Any = None
    certificates: List[Certificate] = field(default_factory=list)


Handler = Callable[[Namespace], CommandResult]


@dataclass
class Command:
    name: str
    help: str
    handler: Handler


class CommandRouter:
    """A group of subcommands under one prefix, e.g. `metric validate`"""

    def __init__(self, prefix: str, help: str = ""):
        self.prefix = prefix
        self.help = help
        self.commands: Dict[str, Command] = {}

    def command(self, name: str, help: str = ""):
        def decorator(handler: Handler) -> Handler:
            self.commands[name] = Command(name=name, help=help, handler=handler)
            return handler

        return decorator

    def register(self, subparsers, common: ArgumentParser) -> None:
        group = subparsers.add_parser(self.prefix, help=self.help)
        actions = group.add_subparsers(dest="action", metavar="<command>")
        actions.required = True
        for command in self.commands.values():
            parser = actions.add_parser(
                command.name, help=command.help, parents=[common]
            )
            parser.set_defaults(
                handler=command.handler, command=f"{self.prefix} {command.name}"
            )


def common_options() -> ArgumentParser:
    """Flags shared by every command"""
    common = ArgumentParser(add_help=False)
    common.add_argument("--in", dest="in_path", help="Input file")
    common.add_argument("--in2", dest="in2_path", help="Second input file")
    common.add_argument("--out", dest="out_path", help="Report path")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    common.add_argument("--n", type=int, help="Number of points")
    common.add_argument(
        "--denom", type=int, default=settings.DEFAULT_DENOM_BOUND, help="Denominator"
    )
    common.add_argument("--delta", help="Grid step, e.g. 1/4")
    common.add_argument("--cap", help="Largest grid value")
    common.add_argument("--max-subset", dest="max_subset", type=int)
    common.add_argument("--iters", type=int, default=1)
    common.add_argument("--count", type=int, help="Sampled requests per step")
    common.add_argument("--window", type=int, default=settings.SYNDETIC_WINDOW)
    common.add_argument("--target", default="chains", help="chains or --in2")
    common.add_argument("--budget", type=float, help="Suite budget in seconds")
    common.add_argument("--format", choices=REPORT_FORMATS, default="json")
    return common


def require_path(args: Namespace, attribute: str = "in_path") -> str:
    value = getattr(args, attribute, None)
    if not value:
        flag = "--in2" if attribute == "in2_path" else "--in"
        raise UsageError(f"{args.command} needs {flag}", details={"flag": flag})
    return value


def require_int(args: Namespace, attribute: str) -> int:
    value = getattr(args, attribute, None)
    if value is None:
        flag = "--" + attribute.replace("_", "-")
        raise UsageError(f"{args.command} needs {flag}", details={"flag": flag})
    return value


def rational_option(
    args: Namespace, attribute: str, default: Optional[Fraction] = None
) -> Optional[Fraction]:
    value = getattr(args, attribute, None)
    if value is None:
        return default
    try:
        return to_rational(value)
    except ValueError as e:
        raise UsageError(f"--{attribute}: {e}", details={"flag": f"--{attribute}"})
