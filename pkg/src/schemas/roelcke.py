"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: roelcke.py                                                            │
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
from typing import List, Optional

from src.models.models import BiKatetovMatrix, StaircaseRelation
from src.schemas.metric import MetricSpaceFile
from src.utils.rational import format_matrix, to_rational


class BiKatetovMatrixFile(BaseModel):
    """{"left": <metric space>, "right": <metric space>, "p": [["p/q", ...], ...]}"""

    left: MetricSpaceFile
    right: MetricSpaceFile
    p: List[List[str]]

    @field_validator("p", mode="before")
    def stringify_entries(cls, v):
        if not isinstance(v, list) or any(not isinstance(row, list) for row in v):
            raise ValueError("p must be an array of rows")
        return [[str(x) if isinstance(x, int) else x for x in row] for row in v]

    @field_validator("p")
    def validate_entries(cls, v):
        for row in v:
            for entry in row:
                to_rational(entry)
        return v

    @model_validator(mode="after")
    def check_shape(self):
        rows = len(self.p)
        if rows != self.left.n or any(len(row) != self.right.n for row in self.p):
            raise ValueError(f"p must be {self.left.n}x{self.right.n}")
        return self

    def entries(self):
        return [[to_rational(x) for x in row] for row in self.p]

    @classmethod
    def from_matrix(cls, m: BiKatetovMatrix) -> "BiKatetovMatrixFile":
        return cls(
            left=MetricSpaceFile.from_space(m.left),
            right=MetricSpaceFile.from_space(m.right),
            p=format_matrix(m.p),
        )


class StaircaseFile(BaseModel):
    """{"n": int, "cells": [[i, j], ...]} with cells sorted by (i+j, i)"""

    n: int = Field(..., ge=0)
    cells: List[List[int]]

    @field_validator("cells")
    def validate_cells(cls, v):
        for cell in v:
            if len(cell) != 2:
                raise ValueError("each cell must be a pair [i, j]")
        return v

    def to_relation(self) -> StaircaseRelation:
        return StaircaseRelation(
            n=self.n, cells=frozenset((i, j) for i, j in self.cells)
        )

    @classmethod
    def from_relation(cls, rel: StaircaseRelation) -> "StaircaseFile":
        return cls(n=rel.n, cells=[[i, j] for i, j in rel.sorted_cells()])


class IdempotentSubsetFile(BaseModel):
    """Input of `roelcke idempotent`: a space and the subset A"""

    space: MetricSpaceFile
    subset: List[int] = Field(..., min_length=1)


class GridIdempotentEntry(BaseModel):
    p: List[List[str]]
    subset: Optional[List[int]] = None
