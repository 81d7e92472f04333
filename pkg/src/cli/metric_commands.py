"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: metric_commands.py                                                    │
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

from argparse import Namespace
import logging

from src.cli.router import (
    CommandResult,
    CommandRouter,
    rational_option,
    require_int,
    require_path,
)
from src.schemas.metric import MetricSpaceFile, dump_isometry
from src.schemas.report import ViolationReport, certificate
from src.services import io_service
from src.services.metric_service import (
    back_and_forth,
    brute_force_isometry,
    diameter,
    random_metric,
    validate_metric,
)
from src.utils.rational import format_rational

logger = logging.getLogger(__name__)

ORACLE_MAX_POINTS = 8

router = CommandRouter("metric", help="Finite metric spaces")


@router.command("validate", help="Check the metric axioms of --in")
def validate(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), MetricSpaceFile)
    checked = validate_metric(file.d, labels=file.labels)
    if isinstance(checked, ViolationReport):
        return CommandResult(
            result={"valid": False, "violation": checked.model_dump(mode="json")},
            certificates=[
                certificate(
                    "metric.axioms",
                    False,
                    kind=checked.kind,
                    indices=list(checked.indices),
                    message=checked.message,
                )
            ],
        )
    return CommandResult(
        result={
            "valid": True,
            "n": checked.n,
            "diameter": format_rational(diameter(checked)),
        },
        certificates=[certificate("metric.axioms", True, n=checked.n)],
    )


@router.command("random", help="Sample a metric on --n points")
def random_space(args: Namespace) -> CommandResult:
    space = random_metric(
        require_int(args, "n"),
        args.denom,
        cap=rational_option(args, "cap"),
        seed=args.seed,
    )
    rechecked = validate_metric(space.d)
    return CommandResult(
        result=MetricSpaceFile.from_space(space).model_dump(mode="json"),
        certificates=[
            certificate(
                "metric.random_valid",
                not isinstance(rechecked, ViolationReport),
                seed=args.seed,
                denom=args.denom,
            )
        ],
    )


@router.command("isometry", help="Find an isometry from --in onto --in2")
def isometry(args: Namespace) -> CommandResult:
    a = io_service.load_space(require_path(args))
    b = io_service.load_space(require_path(args, "in2_path"))
    found = back_and_forth(a, b)
    certificates = [
        certificate(
            "metric.isometry_search",
            True,
            bound="exhaustive",
            isometric=found is not None,
        )
    ]
    if max(a.n, b.n) <= ORACLE_MAX_POINTS:
        oracle = brute_force_isometry(a, b)
        certificates.append(
            certificate(
                "metric.isometry_matches_oracle",
                (oracle is None) == (found is None),
                bound=f"n <= {ORACLE_MAX_POINTS}",
            )
        )
    return CommandResult(
        result={"isometric": found is not None, "mapping": dump_isometry(found)},
        certificates=certificates,
    )
