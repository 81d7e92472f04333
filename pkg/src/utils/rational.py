"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: rational.py                                                           │
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
from typing import Any, Iterable, List, Sequence, Union

RationalLike = Union[Fraction, int, str]


def to_rational(value: Any) -> Fraction:
    """
    Convert a value to an exact rational.

    Accepts Fraction, int and strings of the form "p/q" or "p". Floats are
    rejected: every distance in the library is exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if not _is_integer_literal(num) or not _is_integer_literal(den):
                raise ValueError(f"Not a rational: {value!r}")
            if int(den) == 0:
                raise ValueError(f"Zero denominator: {value!r}")
            return Fraction(int(num), int(den))
        if not _is_integer_literal(text):
            raise ValueError(f"Not a rational: {value!r}")
        return Fraction(int(text))
    raise ValueError(f"Not a rational: {value!r}")


def _is_integer_literal(text: str) -> bool:
    text = text.strip()
    if text.startswith(("+", "-")):
        text = text[1:]
    return text.isdigit()


def format_rational(value: Fraction) -> str:
    """Canonical reduced string: "3/4", "2", "-1/2"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_matrix(matrix: Sequence[Sequence[Fraction]]) -> List[List[str]]:
    return [[format_rational(v) for v in row] for row in matrix]


def parse_matrix(rows: Iterable[Iterable[Any]]) -> List[List[Fraction]]:
    return [[to_rational(v) for v in row] for row in rows]


def grid(
    step: Fraction, cap: Fraction, start: Fraction = Fraction(0)
) -> List[Fraction]:
    """All multiples of step in [start, cap], ascending."""
    if step <= 0:
        raise ValueError("Grid step must be positive")
    first = -((-start) // step)
    values = []
    k = first
    while k * step <= cap:
        values.append(k * step)
        k += 1
    return values
