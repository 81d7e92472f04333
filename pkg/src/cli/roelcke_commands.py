"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: roelcke_commands.py                                                   │
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
from fractions import Fraction
import logging

from src.cli.router import CommandResult, CommandRouter, rational_option, require_path
from src.models.models import BiKatetovMatrix
from src.schemas.report import ViolationReport, certificate
from src.schemas.roelcke import (
    BiKatetovMatrixFile,
    GridIdempotentEntry,
    IdempotentSubsetFile,
    StaircaseFile,
)
from src.services import io_service
from src.services.metric_service import require_metric
from src.services.roelcke_service import (
    compose,
    enumerate_grid_idempotents,
    idempotent_from_subset,
    is_idempotent,
    is_staircase,
    require_bikatetov,
    staircase_compose,
    subset_from_idempotent,
    validate_bikatetov,
)
from src.utils.rational import format_matrix

logger = logging.getLogger(__name__)

router = CommandRouter("roelcke", help="Bi-Katetov matrices and their semigroup")


def _load_matrix(path: str) -> BiKatetovMatrix:
    file = io_service.load_model(path, BiKatetovMatrixFile)
    left = require_metric(file.left.to_space().d, labels=file.left.labels)
    right = require_metric(file.right.to_space().d, labels=file.right.labels)
    return require_bikatetov(left, right, file.entries())


@router.command("validate", help="Check that --in is a bi-Katetov matrix")
def validate(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), BiKatetovMatrixFile)
    left = require_metric(file.left.to_space().d, labels=file.left.labels)
    right = require_metric(file.right.to_space().d, labels=file.right.labels)
    checked = validate_bikatetov(left, right, file.entries())
    if isinstance(checked, ViolationReport):
        return CommandResult(
            result={"valid": False, "violation": checked.model_dump(mode="json")},
            certificates=[
                certificate(
                    "roelcke.bikatetov",
                    False,
                    kind=checked.kind,
                    indices=list(checked.indices),
                )
            ],
        )
    return CommandResult(
        result={"valid": True, "left": left.n, "right": right.n},
        certificates=[certificate("roelcke.bikatetov", True)],
    )


@router.command("compose", help="Capped min-plus product of --in and --in2")
def compose_matrices(args: Namespace) -> CommandResult:
    p = _load_matrix(require_path(args))
    q = _load_matrix(require_path(args, "in2_path"))
    r = compose(p, q)
    checked = validate_bikatetov(r.left, r.right, r.p)
    return CommandResult(
        result=BiKatetovMatrixFile.from_matrix(r).model_dump(mode="json"),
        certificates=[
            certificate(
                "roelcke.composite_valid", not isinstance(checked, ViolationReport)
            )
        ],
    )


@router.command("idempotent", help="The idempotent p_A of a subset A")
def idempotent(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), IdempotentSubsetFile)
    space = require_metric(file.space.to_space().d, labels=file.space.labels)
    e = idempotent_from_subset(space, file.subset)
    recovered = subset_from_idempotent(e)
    return CommandResult(
        result={"p": format_matrix(e.p), "subset": recovered},
        certificates=[
            certificate("roelcke.idempotent", is_idempotent(e)),
            certificate(
                "roelcke.subset_round_trip",
                recovered == sorted(set(file.subset)),
                subset=recovered,
            ),
        ],
    )


@router.command("grid", help="Every idempotent on the --delta grid over --in")
def grid_idempotents(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    delta = rational_option(args, "delta", Fraction(1, 2))
    found = enumerate_grid_idempotents(space, delta)
    entries = [
        GridIdempotentEntry(p=format_matrix(m.p), subset=subset).model_dump()
        for m, subset in found
    ]
    return CommandResult(
        result={
            "idempotents": entries,
            "count": len(entries),
            "without_subset": sum(1 for _, subset in found if subset is None),
        }
    )


@router.command("staircase", help="Compose the staircases --in and --in2")
def staircase(args: Namespace) -> CommandResult:
    a = io_service.load_model(require_path(args), StaircaseFile).to_relation()
    b = io_service.load_model(
        require_path(args, "in2_path"), StaircaseFile
    ).to_relation()
    result = staircase_compose(a, b)
    return CommandResult(
        result=StaircaseFile.from_relation(result).model_dump(mode="json"),
        certificates=[certificate("roelcke.staircase", is_staircase(result))],
    )
