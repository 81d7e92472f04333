"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: syndetic.py                                                           │
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

from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Optional

from src.models.models import BohrSpec, IntegerWindowSet
from src.utils.rational import format_rational, to_rational


class WindowSetFile(BaseModel):
    """{"window": N, "members": [ints]} with members inside [-N, N]"""

    window: int = Field(..., ge=0)
    members: List[int]

    @model_validator(mode="after")
    def check_members(self):
        outside = [m for m in self.members if not -self.window <= m <= self.window]
        if outside:
            raise ValueError(f"members outside [-{self.window}, {self.window}]")
        return self

    def to_set(self) -> IntegerWindowSet:
        members = tuple(sorted(set(self.members)))
        return IntegerWindowSet(window=self.window, members=members)

    @classmethod
    def from_set(cls, s: IntegerWindowSet) -> "WindowSetFile":
        return cls(window=s.window, members=list(s.members))


class BohrSpecFile(BaseModel):
    """{"thetas": ["p/q", ...], "eps": "p/q"}"""

    thetas: List[str] = Field(default_factory=list)
    eps: str

    @field_validator("thetas", mode="before")
    def stringify_thetas(cls, v):
        return [str(x) if isinstance(x, int) else x for x in v]

    @field_validator("eps", mode="before")
    def stringify_eps(cls, v):
        return str(v) if isinstance(v, int) else v

    @field_validator("thetas")
    def validate_thetas(cls, v):
        for theta in v:
            value = to_rational(theta)
            if not 0 <= value < 1:
                raise ValueError(f"frequency {theta} is outside [0, 1)")
        return v

    @field_validator("eps")
    def validate_eps(cls, v):
        if to_rational(v) <= 0:
            raise ValueError("eps must be positive")
        return v

    def to_spec(self) -> BohrSpec:
        return BohrSpec(
            frequencies=tuple(to_rational(t) for t in self.thetas),
            epsilon=to_rational(self.eps),
        )

    @classmethod
    def from_spec(cls, spec: BohrSpec) -> "BohrSpecFile":
        return cls(
            thetas=[format_rational(t) for t in spec.frequencies],
            eps=format_rational(spec.epsilon),
        )


class GroupTableFile(BaseModel):
    """{"table": [[a*b for b] for a], "name"?: str}"""

    table: List[List[int]] = Field(..., min_length=1)
    name: str = ""


class GapReport(BaseModel):
    members: int
    max_gap: Optional[int] = None
    syndetic: bool
    growing_gap: bool = False
    verdict: str


class SumsetReport(BaseModel):
    window: int
    reliable: int = Field(..., description="Exact on [-reliable, reliable]")
    members: List[int]


class TripleSumBohrReport(BaseModel):
    holds: bool
    reliable_triple: int
    reliable_difference: int
    bohr_members: int
    violations: List[int] = Field(default_factory=list)
    difference_violations: List[int] = Field(
        default_factory=list, description="Bohr points missing from S-S, informational"
    )


class PestovWitness(BaseModel):
    group: str = ""
    order: int
    extremely_amenable: bool
    S: List[int] = Field(default_factory=list)
    F: List[int] = Field(default_factory=list)
    SS_inverse: List[int] = Field(default_factory=list)
    bound: str


class CharacterReport(BaseModel):
    modulus: int
    values: Dict[int, int]

