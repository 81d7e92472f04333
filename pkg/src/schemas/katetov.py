"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: katetov.py                                                            │
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

from fractions import Fraction
from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Literal, Optional, Union

from src.models.models import ExtensionStep, FiniteMetricSpace, KatetovFunction
from src.schemas.metric import MetricSpaceFile
from src.utils.rational import format_rational, to_rational


class FullStrategy(BaseModel):
    """Adjoin every grid Katetov function on every subset of size <= max_subset"""

    kind: Literal["full"] = "full"
    delta: Fraction = Field(..., description="Grid step")
    cap: Fraction = Field(..., description="Largest grid value")
    max_subset: int = Field(3, ge=1)

    model_config = {"arbitrary_types_allowed": True}

    @field_validator("delta", "cap", mode="before")
    def parse_rational(cls, v):
        return to_rational(v)


class SampledStrategy(FullStrategy):
    """Adjoin `count` randomly drawn grid Katetov functions per step"""

    kind: Literal["sampled"] = "sampled"
    count: int = Field(..., ge=1)
    seed: int = 0


Strategy = Union[FullStrategy, SampledStrategy]


class KatetovFunctionFile(BaseModel):
    """{"base": [point indices], "values": ["p/q", ...]}"""

    base: List[int]
    values: List[str]

    @field_validator("values", mode="before")
    def stringify_values(cls, v):
        return [str(x) if isinstance(x, int) else x for x in v]

    @field_validator("values")
    def validate_values(cls, v):
        for entry in v:
            to_rational(entry)
        return v

    @model_validator(mode="after")
    def check_lengths(self):
        if len(self.base) != len(self.values):
            raise ValueError("base and values must have the same length")
        if len(set(self.base)) != len(self.base):
            raise ValueError("base contains repeated points")
        return self

    def to_function(self, space: FiniteMetricSpace) -> KatetovFunction:
        pairs = sorted(zip(self.base, (to_rational(v) for v in self.values)))
        return KatetovFunction(
            base=space,
            support=tuple(p for p, _ in pairs),
            values=tuple(v for _, v in pairs),
        )

    @classmethod
    def from_function(cls, f: KatetovFunction) -> "KatetovFunctionFile":
        return cls(
            base=list(f.support), values=[format_rational(v) for v in f.values]
        )


class KatetovFunctionList(BaseModel):
    functions: List[KatetovFunctionFile]


class ExtensionStepFile(BaseModel):
    before: MetricSpaceFile
    after: MetricSpaceFile
    embedding: List[int]
    adjoined: List[KatetovFunctionFile]
    adjoined_points: List[int]
    merged: List[List[int]] = Field(default_factory=list)

    @classmethod
    def from_step(cls, step: ExtensionStep) -> "ExtensionStepFile":
        return cls(
            before=MetricSpaceFile.from_space(step.before),
            after=MetricSpaceFile.from_space(step.after),
            embedding=step.embedding.images(),
            adjoined=[KatetovFunctionFile.from_function(f) for f, _ in step.adjoined],
            adjoined_points=[p for _, p in step.adjoined],
            merged=[[i, p] for i, p in step.merged],
        )


class ScoreReport(BaseModel):
    score: str
    realized: int
    total: int
    over: Optional[List[int]] = None
