"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: flows_commands.py                                                     │
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
from math import factorial
import logging

from src.cli.router import CommandResult, CommandRouter, require_int, require_path
from src.core.exceptions import UsageError
from src.schemas.flows import ActionFile, LaminarFamilyFile, SelfMapListFile
from src.schemas.report import certificate
from src.services import io_service
from src.services.flows_service import (
    chain_target,
    ellis_idempotent,
    equivariant_maps,
    fixed_points,
    generate_semigroup,
    idempotents,
    is_free,
    is_k_transitive,
    laminar_chain_map,
    linear_orders_flow,
    maximal_chains,
    minimal_left_ideals,
    orbits,
    power_idempotent,
    verify_ideal_structure,
)

logger = logging.getLogger(__name__)

router = CommandRouter("flows", help="Finite semigroups, actions and flows")


@router.command("semigroup", help="Close the generators in --in under composition")
def semigroup(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), SelfMapListFile)
    S = generate_semigroup(file.to_maps())
    power = power_idempotent(S.elements[0])
    ellis = S.elements[ellis_idempotent(S)]
    return CommandResult(
        result={
            "size": len(S),
            "elements": [list(s.images) for s in S.elements],
            "idempotents": [list(S.elements[i].images) for i in idempotents(S)],
            "power_idempotent": list(power.images),
            "ellis_idempotent": list(ellis.images),
        },
        certificates=[
            certificate(
                "flows.idempotent_found",
                power in S.index and ellis.then(ellis) == ellis,
                size=len(S),
            )
        ],
    )


@router.command("ideals", help="Minimal left ideals of the semigroup of --in")
def ideals(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), SelfMapListFile)
    S = generate_semigroup(file.to_maps())
    minimal = minimal_left_ideals(S)
    certificates = []
    reports = []
    for index, ideal in enumerate(minimal):
        report = verify_ideal_structure(S, ideal, minimal)
        reports.append(
            {
                "ideal": [list(S.elements[m].images) for m in report.ideal],
                "idempotent": list(S.elements[report.idempotent].images),
            }
        )
        for cert in report.certificates:
            certificates.append(
                cert.model_copy(update={"property": f"flows.{index}.{cert.property}"})
            )
    return CommandResult(
        result={"size": len(S), "ideals": reports}, certificates=certificates
    )


@router.command("chains", help="Maximal chains of subsets of --n points")
def chains(args: Namespace) -> CommandResult:
    n = require_int(args, "n")
    found = maximal_chains(n)
    return CommandResult(
        result={"n": n, "chains": [list(c.ordering()) for c in found]},
        certificates=[
            certificate("flows.chain_count", len(found) == factorial(n), n=n)
        ],
    )


@router.command("equivariant", help="All equivariant maps from the action --in")
def equivariant(args: Namespace) -> CommandResult:
    source = io_service.load_model(require_path(args), ActionFile).to_action()
    if args.in2_path:
        target = io_service.load_model(args.in2_path, ActionFile).to_action()
        target_name = "in2"
    elif args.target == "chains":
        _, target = chain_target(source)
        target_name = "chains"
    else:
        raise UsageError(
            f"Unknown target {args.target!r}", details={"flag": "--target"}
        )
    maps = equivariant_maps(source, target)
    return CommandResult(
        result={
            "target": target_name,
            "target_size": target.n,
            "three_transitive": source.n >= 3 and is_k_transitive(source, 3),
            "maps": [list(f) for f in maps],
        },
        certificates=[
            certificate(
                "flows.equivariant_search",
                True,
                bound="exhaustive",
                exhaustive=True,
                count=len(maps),
            )
        ],
    )


@router.command("orders", help="The flow of linear orders on --n points")
def orders(args: Namespace) -> CommandResult:
    report = linear_orders_flow(require_int(args, "n"))
    return CommandResult(
        result=report.model_dump(mode="json"),
        certificates=[
            certificate(
                "flows.linear_orders_minimal",
                report.minimal and report.orders == factorial(report.n),
                orders=report.orders,
                orbits=report.orbits,
            )
        ],
    )


@router.command("laminar", help="Chain map of the laminar family in --in")
def laminar(args: Namespace) -> CommandResult:
    file = io_service.load_model(require_path(args), LaminarFamilyFile)
    report = laminar_chain_map(file.family, file.to_action())
    return CommandResult(
        result=report.model_dump(mode="json"),
        certificates=[
            certificate(
                "flows.laminar_chain_map",
                report.is_chain and report.equivariant,
                maximal=report.is_maximal,
            )
        ],
    )


@router.command("orbits", help="Orbits and transitivity of the action --in")
def action_orbits(args: Namespace) -> CommandResult:
    action = io_service.load_model(require_path(args), ActionFile).to_action()
    return CommandResult(
        result={
            "orbits": orbits(action),
            "transitivity": {
                k: is_k_transitive(action, k) for k in range(1, min(3, action.n) + 1)
            },
            "free": is_free(action),
            "fixed_points": fixed_points(action),
        }
    )
