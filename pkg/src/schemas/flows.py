"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: flows.py                                                              │
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

from src.models.models import FiniteAction, SelfMap
from src.schemas.report import Certificate


class SelfMapListFile(BaseModel):
    """{"n": int, "generators": [[images], ...]}"""

    n: int = Field(..., ge=1)
    generators: List[List[int]] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_images(self):
        for index, images in enumerate(self.generators):
            if len(images) != self.n:
                raise ValueError(f"generator {index} must have {self.n} images")
            if any(not 0 <= y < self.n for y in images):
                raise ValueError(f"generator {index} has an image out of range")
        return self

    def to_maps(self) -> List[SelfMap]:
        return [SelfMap(tuple(images)) for images in self.generators]


class ActionFile(SelfMapListFile):
    """Permutation generators of a group acting on {0, ..., n-1}"""

    generators: List[List[int]] = Field(default_factory=list)

    @field_validator("generators")
    def check_bijections(cls, v):
        for index, images in enumerate(v):
            if len(set(images)) != len(images):
                raise ValueError(f"generator {index} is not a permutation")
        return v

    def to_action(self) -> FiniteAction:
        return FiniteAction(n=self.n, generators=tuple(self.to_maps()))

    @classmethod
    def from_action(cls, action: FiniteAction) -> "ActionFile":
        return cls(n=action.n, generators=[list(g.images) for g in action.generators])


class LaminarFamilyFile(BaseModel):
    """A set family over {0, ..., n-1} plus the generators that should permute it"""

    n: int = Field(..., ge=1)
    family: List[List[int]]
    generators: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_generators(self):
        for index, images in enumerate(self.generators):
            if sorted(images) != list(range(self.n)):
                raise ValueError(f"generator {index} is not a permutation of X")
        return self

    def to_action(self) -> FiniteAction:
        return FiniteAction(
            n=self.n, generators=tuple(SelfMap(tuple(g)) for g in self.generators)
        )


class IdealStructureReport(BaseModel):
    ideal: List[int]
    idempotent: int
    certificates: List[Certificate]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)


class LaminarChainReport(BaseModel):
    chains: Dict[int, List[List[int]]]
    is_chain: bool
    equivariant: bool
    is_maximal: bool


class LinearOrdersReport(BaseModel):
    n: int
    orders: int
    invariant: bool
    orbits: int
    minimal: bool
    relation_orbits: Optional[int] = Field(
        None, description="Orbit count on all relations (n <= 3 only)"
    )
    relation_orbit_sizes: Optional[Dict[int, int]] = None
