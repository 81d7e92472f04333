"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: runner.py                                                             │
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

from typing import Callable, Dict, List, Optional, Sequence
import logging

from src.config.settings import settings
from src.core.exceptions import BaseLabException, UsageError
from src.schemas.report import Certificate, RunReport, certificate
from src.suites.base import Budget
from src.suites.flows_suite import run_flows_suite
from src.suites.katetov_suite import run_katetov_suite
from src.suites.metric_suite import run_metric_suite
from src.suites.roelcke_suite import run_roelcke_suite
from src.suites.syndetic_suite import run_syndetic_suite

logger = logging.getLogger(__name__)

SuiteFunction = Callable[[int, Budget], List[Certificate]]

all_suites: Dict[str, SuiteFunction] = {
    "metric": run_metric_suite,
    "katetov": run_katetov_suite,
    "roelcke": run_roelcke_suite,
    "flows": run_flows_suite,
    "syndetic": run_syndetic_suite,
}

# Canonical execution order
suite_order = ["metric", "katetov", "roelcke", "flows", "syndetic"]


def resolve_suites(names: Optional[Sequence[str]]) -> List[str]:
    """
    Expand "all" (or nothing) to every suite and put the rest in canonical
    order. Unknown names raise UsageError.
    """
    if not names or "all" in names:
        return list(suite_order)
    invalid = [name for name in names if name not in all_suites]
    if invalid:
        logger.error(f"Invalid suites: {', '.join(invalid)}")
        logger.info(f"Available suites: all, {', '.join(suite_order)}")
        raise UsageError(
            f"Unknown suite: {', '.join(invalid)}",
            details={"available": ["all"] + suite_order},
        )
    return [name for name in suite_order if name in names]


def run_suites(
    names: Optional[Sequence[str]],
    seed: int = 0,
    budget: Optional[float] = None,
) -> RunReport:
    """
    Run the requested suites in canonical order under one shared budget and
    fold their certificates into a single report
    """
    selected = resolve_suites(names)
    shared = Budget(budget if budget is not None else settings.SUITE_BUDGET_SECONDS)
    certificates: List[Certificate] = []

    for name in selected:
        logger.info(f"Running suite: {name}")
        try:
            certificates.extend(all_suites[name](seed, shared))
        except BaseLabException as e:
            logger.error(f"Error running suite {name}: {e.message}")
            certificates.append(
                certificate(f"{name}.error", False, error_code=e.error_code)
            )

    failed = [c.property for c in certificates if not c.passed]
    if failed:
        logger.error(f"There were failing certificates: {', '.join(failed)}")
    else:
        logger.info("All suites passed")
    return RunReport(
        schema=settings.REPORT_SCHEMA_VERSION,
        command="suite " + " ".join(names or ["all"]),
        result={"suites": selected, "seed": seed},
        certificates=certificates,
        exit_code=1 if failed else 0,
    )
