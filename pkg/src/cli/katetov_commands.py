"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: katetov_commands.py                                                   │
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
from typing import Any, Dict
import logging

from src.cli.router import CommandResult, CommandRouter, rational_option, require_path
from src.schemas.katetov import (
    ExtensionStepFile,
    FullStrategy,
    KatetovFunctionFile,
    KatetovFunctionList,
    SampledStrategy,
    ScoreReport,
    Strategy,
)
from src.schemas.metric import MetricSpaceFile
from src.schemas.report import ViolationReport, certificate
from src.services import io_service
from src.services.katetov_service import (
    adjoin,
    compose_embeddings,
    default_strategy,
    extension_property_score,
    is_katetov,
    kappa_extend,
    urysohn_approx,
)
from src.services.metric_service import is_isometric_map
from src.utils.rational import format_rational

logger = logging.getLogger(__name__)

router = CommandRouter("katetov", help="Katetov functions and Urysohn towers")


def _strategy(args: Namespace, space) -> Strategy:
    """Defaults from the settings, overridden by --delta/--cap/--max-subset"""
    default = default_strategy(space)
    options: Dict[str, Any] = {
        "delta": rational_option(args, "delta", default.delta),
        "cap": rational_option(args, "cap", default.cap),
        "max_subset": args.max_subset or default.max_subset,
    }
    if args.count:
        return SampledStrategy(count=args.count, seed=args.seed, **options)
    return FullStrategy(**options)


def _describe(strategy: Strategy) -> Dict[str, Any]:
    described = {
        "kind": strategy.kind,
        "delta": format_rational(strategy.delta),
        "cap": format_rational(strategy.cap),
        "max_subset": strategy.max_subset,
    }
    if isinstance(strategy, SampledStrategy):
        described.update(count=strategy.count, seed=strategy.seed)
    return described


@router.command("check", help="Is --in2 a Katetov function on the space --in")
def check(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    file = io_service.load_model(require_path(args, "in2_path"), KatetovFunctionFile)
    f = file.to_function(space).as_dict()
    verdict = is_katetov(space, f)
    if isinstance(verdict, ViolationReport):
        return CommandResult(
            result={"katetov": False, "violation": verdict.model_dump(mode="json")},
            certificates=[
                certificate(
                    "katetov.function",
                    False,
                    kind=verdict.kind,
                    indices=list(verdict.indices),
                )
            ],
        )
    return CommandResult(
        result={"katetov": True},
        certificates=[certificate("katetov.function", True, n=space.n)],
    )


@router.command("extend", help="Extend --in2 (on Y) to the whole space")
def extend(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    file = io_service.load_model(require_path(args, "in2_path"), KatetovFunctionFile)
    f = file.to_function(space)
    g = kappa_extend(space, f.support, f.as_dict())
    agrees = all(g.values[y] == v for y, v in zip(f.support, f.values))
    return CommandResult(
        result=KatetovFunctionFile.from_function(g).model_dump(mode="json"),
        certificates=[
            certificate("katetov.extends_input", agrees, subset=list(f.support)),
            certificate(
                "katetov.extension_is_katetov", is_katetov(space, g.values) is True
            ),
        ],
    )


@router.command("adjoin", help="Adjoin one point per function in --in2")
def adjoin_points(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    listing = io_service.load_model(require_path(args, "in2_path"), KatetovFunctionList)
    step = adjoin(space, [f.to_function(space) for f in listing.functions])
    return CommandResult(
        result=ExtensionStepFile.from_step(step).model_dump(mode="json"),
        certificates=[
            certificate(
                "katetov.embedding_isometric",
                is_isometric_map(step.embedding),
                before=step.before.n,
                after=step.after.n,
            )
        ],
    )


@router.command("urysohn", help="Iterate the Katetov extension --iters times")
def urysohn(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    strategy = _strategy(args, space)
    steps = urysohn_approx(space, args.iters, strategy)
    final = steps[-1].after if steps else space
    certificates = []
    if steps:
        certificates.append(
            certificate(
                "katetov.tower_isometric",
                is_isometric_map(compose_embeddings(steps)),
                steps=len(steps),
            )
        )
    return CommandResult(
        result={
            "strategy": _describe(strategy),
            "steps": [
                {
                    "before": step.before.n,
                    "after": step.after.n,
                    "adjoined": len(step.adjoined),
                    "merged": len(step.merged),
                }
                for step in steps
            ],
            "final": MetricSpaceFile.from_space(final).model_dump(mode="json"),
        },
        certificates=certificates,
    )


@router.command("score", help="Share of grid requests realized in --in")
def score(args: Namespace) -> CommandResult:
    space = io_service.load_space(require_path(args))
    strategy = _strategy(args, space)
    value, realized, total = extension_property_score(
        space, strategy.max_subset, strategy.delta, strategy.cap
    )
    report = ScoreReport(
        score=format_rational(value), realized=realized, total=total
    )
    return CommandResult(
        result={"strategy": _describe(strategy), **report.model_dump(mode="json")}
    )
