"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: base.py                                                               │
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

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import logging
import time

from src.schemas.report import Certificate, certificate

logger = logging.getLogger(__name__)


class Budget:
    """Wall-clock allowance shared by the suites of one run"""

    def __init__(self, seconds: Optional[float]):
        self.seconds = seconds
        self.started = time.monotonic()

    def exhausted(self) -> bool:
        if self.seconds is None:
            return False
        return time.monotonic() - self.started > self.seconds


@dataclass
class _Tally:
    checked: int = 0
    failed: int = 0
    first_failure: Optional[Dict[str, Any]] = None
    notes: Dict[str, Any] = field(default_factory=dict)


@dataclass
class PropertyTally:
    """
    Collects many checks of the same properties and folds them into one
    certificate per property, keeping the first failing witness.
    """

    suite: str
    bound: str
    tallies: Dict[str, _Tally] = field(default_factory=dict)
    interrupted: Optional[int] = None

    def check(self, name: str, ok: bool, **witness: Any) -> bool:
        tally = self.tallies.setdefault(name, _Tally())
        tally.checked += 1
        if not ok:
            tally.failed += 1
            if tally.first_failure is None:
                tally.first_failure = witness
                logger.warning(f"{self.suite}.{name} failed: {witness}")
        return ok

    def annotate(self, name: str, **notes: Any) -> None:
        """Extra witness fields reported with the certificate of `name`"""
        self.tallies.setdefault(name, _Tally()).notes.update(notes)

    def out_of_budget(self, budget: Budget, completed: int) -> bool:
        if budget.exhausted():
            self.interrupted = completed
            logger.error(f"Suite {self.suite} ran out of budget after {completed}")
            return True
        return False

    def certificates(self) -> List[Certificate]:
        certs = []
        for name, tally in self.tallies.items():
            witness: Dict[str, Any] = {"checked": tally.checked, "failed": tally.failed}
            witness.update(tally.notes)
            if tally.first_failure is not None:
                witness["first_failure"] = tally.first_failure
            certs.append(
                certificate(
                    f"{self.suite}.{name}",
                    tally.failed == 0,
                    bound=self.bound,
                    **witness,
                )
            )
        if self.interrupted is not None:
            certs.append(
                certificate(
                    f"{self.suite}.budget",
                    False,
                    bound=self.bound,
                    completed=self.interrupted,
                )
            )
        return certs
