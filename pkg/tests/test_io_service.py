"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_io_service.py                                                    │
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

import hashlib
import json

import pytest

from src.core.exceptions import DomainError, InvalidInputFileError, UsageError
from src.schemas.metric import MetricSpaceFile
from src.schemas.report import RunReport, certificate
from src.services import io_service


def test_missing_file(report_dir):
    with pytest.raises(InvalidInputFileError) as info:
        io_service.read_json(report_dir / "absent.json")
    assert info.value.details["field"] == "<file>"


def test_malformed_json(report_dir):
    path = report_dir / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidInputFileError) as info:
        io_service.read_json(path)
    assert info.value.details["field"] == "<json>"


def test_schema_error_names_the_field(write_json):
    path = write_json("space.json", {"n": 2, "d": [["0", "x"], ["1", "0"]]})
    with pytest.raises(InvalidInputFileError) as info:
        io_service.load_model(path, MetricSpaceFile)
    assert info.value.details["field"] == "d"
    path = write_json("space.json", {"d": [["0"]]})
    with pytest.raises(InvalidInputFileError) as info:
        io_service.load_model(path, MetricSpaceFile)
    assert info.value.details["field"] == "n"


def test_load_space_checks_the_axioms(write_json):
    good = write_json("good.json", {"n": 2, "d": [[0, "1/2"], ["1/2", 0]]})
    assert io_service.load_space(good).d[0][1] * 2 == 1
    bad = write_json("bad.json", {"n": 3, "d": [[0, 1, 3], [1, 0, 1], [3, 1, 0]]})
    with pytest.raises(DomainError):
        io_service.load_space(bad)


def test_digests(write_json):
    path = write_json("a.json", {"n": 1, "d": [[0]]})
    with open(path, "rb") as handle:
        expected = hashlib.sha256(handle.read()).hexdigest()
    assert io_service.sha256_file(path) == expected
    assert io_service.input_digests({"in2": None, "in": path}) == {"in": expected}


@pytest.fixture
def report():
    return RunReport(
        command="metric validate",
        result={"valid": False},
        certificates=[
            certificate("metric.axioms", False, kind="triangle", indices=[0, 1, 2])
        ],
        exit_code=1,
    )


def test_json_rendering_is_canonical(report):
    text = io_service.render_report(report)
    assert text.endswith("\n")
    payload = json.loads(text)
    assert payload["schema"] == "1"
    assert list(payload) == sorted(payload)
    assert io_service.render_report(report) == text


def test_csv_rendering(report):
    lines = io_service.render_report(report, "csv").splitlines()
    assert lines[0] == "command,property,verdict,bound,witness"
    assert lines[1].startswith("metric validate,metric.axioms,fail,,")
    assert len(lines) == 2


def test_unknown_format(report):
    with pytest.raises(UsageError):
        io_service.render_report(report, "xml")


def test_write_report_creates_directories(report, tmp_path):
    path = io_service.write_report(report, tmp_path / "nested" / "report.json")
    assert json.loads(path.read_text())["exit_code"] == 1
