"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: syndetic_commands.py                                                  │
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

from src.cli.router import CommandResult, CommandRouter, require_path
from src.schemas.report import certificate
from src.schemas.syndetic import BohrSpecFile, GroupTableFile, WindowSetFile
from src.services import io_service
from src.services.syndetic_service import (
    bohr_members,
    check_triple_sum_bohr,
    is_syndetic,
    nontrivial_character,
    pestov_witness,
)
from src.utils.groups import validate_group_table

logger = logging.getLogger(__name__)

router = CommandRouter("syndetic", help="Syndetic sets, Bohr sets and finite groups")


@router.command("gaps", help="Gap profile of the window set --in")
def gaps(args: Namespace) -> CommandResult:
    s = io_service.load_model(require_path(args), WindowSetFile).to_set()
    return CommandResult(result=is_syndetic(s).model_dump(mode="json"))


@router.command("bohr", help="Members of the Bohr set --in inside [-window, window]")
def bohr(args: Namespace) -> CommandResult:
    spec = io_service.load_model(require_path(args), BohrSpecFile).to_spec()
    members = bohr_members(spec, args.window)
    return CommandResult(
        result={
            "window": args.window,
            "count": len(members.members),
            "members": list(members.members),
        }
    )


@router.command("triple", help="Does S - S + S contain the Bohr set --in2")
def triple(args: Namespace) -> CommandResult:
    s = io_service.load_model(require_path(args), WindowSetFile).to_set()
    spec = io_service.load_model(require_path(args, "in2_path"), BohrSpecFile)
    report = check_triple_sum_bohr(s, spec.to_spec())
    return CommandResult(
        result=report.model_dump(mode="json"),
        certificates=[
            certificate(
                "syndetic.triple_sum_contains_bohr_set",
                report.holds,
                bound=f"[-{report.reliable_triple}, {report.reliable_triple}]",
                violations=report.violations[:20],
            )
        ],
    )


@router.command("pestov", help="Syndetic witness against extreme amenability")
def pestov(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), GroupTableFile)
    group = validate_group_table(file.table, name=file.name)
    witness = pestov_witness(group)
    everything = set(range(group.order))
    covered = {group.mul(f, s) for f in witness.F for s in witness.S}
    character = nontrivial_character(group)
    if witness.extremely_amenable:
        ok = group.order == 1
    else:
        ok = covered == everything and set(witness.SS_inverse) != everything
    return CommandResult(
        result={
            "witness": witness.model_dump(mode="json"),
            "character": character.model_dump(mode="json") if character else None,
        },
        certificates=[
            certificate(
                "syndetic.pestov_witness",
                ok,
                bound=witness.bound,
                extremely_amenable=witness.extremely_amenable,
            )
        ],
    )
