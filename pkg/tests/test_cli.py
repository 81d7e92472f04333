"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_cli.py                                                           │
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

import json

import pytest

from src.core.exceptions import InvalidInputFileError
from src.main import run
from src.schemas.report import ViolationReport
from src.services import io_service
from src.services.metric_service import validate_metric

TRIANGLE_BAD = {"n": 3, "d": [[0, 1, 3], [1, 0, 1], [3, 1, 0]]}
PAIR = {"n": 2, "d": [["0", "1"], ["1", "0"]]}


def test_valid_metric_passes(cli, write_json):
    path = write_json("pair.json", PAIR)
    code, report = cli("metric", "validate", "--in", path)
    assert code == 0
    assert report["command"] == "metric validate"
    assert report["result"]["valid"] is True
    assert set(report["inputs"]) == {"in"}
    assert len(report["inputs"]["in"]) == 64


def test_triangle_violation_fails(cli, write_json):
    path = write_json("bad.json", TRIANGLE_BAD)
    code, report = cli("metric", "validate", "--in", path)
    assert code == 1
    assert report["exit_code"] == 1
    (cert,) = report["certificates"]
    assert cert["property"] == "metric.axioms"
    assert cert["verdict"] == "fail"
    assert cert["witness"]["indices"] == [0, 1, 2]


def test_random_metric_is_deterministic(cli, report_dir):
    first = cli("metric", "random", "--n", "5", "--seed", "3")
    second = cli("metric", "random", "--n", "5", "--seed", "3")
    assert first == second
    assert first[0] == 0
    assert first[1]["result"]["n"] == 5


def test_isometry_of_reversed_line(cli, write_json):
    a = write_json("a.json", {"n": 3, "d": [[0, 1, 3], [1, 0, 2], [3, 2, 0]]})
    b = write_json("b.json", {"n": 3, "d": [[0, 2, 3], [2, 0, 1], [3, 1, 0]]})
    code, report = cli("metric", "isometry", "--in", a, "--in2", b)
    assert code == 0
    assert report["result"] == {"isometric": True, "mapping": [[0, 2], [1, 1], [2, 0]]}


def test_katetov_extend(cli, write_json):
    space = write_json("line.json", {"n": 3, "d": [[0, 1, 3], [1, 0, 2], [3, 2, 0]]})
    f = write_json("f.json", {"base": [0, 2], "values": ["1", "2"]})
    code, report = cli("katetov", "extend", "--in", space, "--in2", f)
    assert code == 0
    assert report["result"] == {"base": [0, 1, 2], "values": ["1", "2", "2"]}


def test_katetov_extend_rejects_non_katetov_input(cli, write_json):
    space = write_json("line.json", {"n": 3, "d": [[0, 1, 3], [1, 0, 2], [3, 2, 0]]})
    f = write_json("f.json", {"base": [0, 2], "values": ["1", "1"]})
    assert cli("katetov", "extend", "--in", space, "--in2", f) == (2, None)


def test_katetov_score_on_one_point(cli, write_json):
    point = write_json("point.json", {"n": 1, "d": [["0"]]})
    code, report = cli(
        "katetov", "score", "--in", point, "--delta", "1/2", "--cap", "1",
        "--max-subset", "1",
    )
    assert code == 0
    assert report["result"]["score"] == "1/3"
    assert report["result"]["total"] == 3


def test_urysohn_tower(cli, write_json):
    point = write_json("point.json", {"n": 1, "d": [["0"]]})
    code, report = cli(
        "katetov", "urysohn", "--in", point, "--delta", "1/2", "--cap", "1",
        "--max-subset", "1", "--iters", "2",
    )
    assert code == 0
    assert report["result"]["steps"][0]["after"] == 3
    assert report["certificates"][0]["property"] == "katetov.tower_isometric"


def test_compose_with_identity(cli, write_json):
    identity = {"left": PAIR, "right": PAIR, "p": [["0", "1"], ["1", "0"]]}
    path = write_json("identity.json", identity)
    code, report = cli("roelcke", "compose", "--in", path, "--in2", path)
    assert code == 0
    assert report["result"]["p"] == [["0", "1"], ["1", "0"]]


def test_subset_idempotent(cli, write_json):
    path = write_json("subset.json", {"space": PAIR, "subset": [0]})
    code, report = cli("roelcke", "idempotent", "--in", path)
    assert code == 0
    assert report["result"] == {"p": [["0", "1"], ["1", "1"]], "subset": [0]}


def test_staircase_compose(cli, write_json):
    unit = write_json("unit.json", {"n": 1, "cells": [[0, 0], [1, 0], [1, 1]]})
    upper = write_json("upper.json", {"n": 1, "cells": [[0, 0], [0, 1], [1, 1]]})
    code, report = cli("roelcke", "staircase", "--in", unit, "--in2", upper)
    assert code == 0
    assert report["result"]["cells"] == [[0, 0], [0, 1], [1, 1]]


def test_s3_has_no_equivariant_chain_map(cli, write_json):
    path = write_json("s3.json", {"n": 3, "generators": [[1, 2, 0], [1, 0, 2]]})
    code, report = cli("flows", "equivariant", "--in", path)
    assert code == 0
    assert report["result"]["maps"] == []
    assert report["result"]["three_transitive"] is True
    (cert,) = report["certificates"]
    assert cert["witness"]["exhaustive"] is True
    assert cert["witness"]["count"] == 0


def test_semigroup_and_chains(cli, write_json):
    path = write_json("maps.json", {"n": 3, "generators": [[1, 2, 2]]})
    code, report = cli("flows", "semigroup", "--in", path)
    assert code == 0
    assert report["result"]["power_idempotent"] == [2, 2, 2]
    code, report = cli("flows", "chains", "--n", "3")
    assert code == 0
    assert len(report["result"]["chains"]) == 6


def test_syndetic_commands(cli, write_json):
    bohr = write_json("bohr.json", {"thetas": ["1/2"], "eps": "1"})
    code, report = cli("syndetic", "bohr", "--in", bohr, "--window", "4")
    assert code == 0
    assert report["result"]["members"] == [-4, -2, 0, 2, 4]
    evens = write_json("evens.json", {"window": 12, "members": list(range(-12, 13, 2))})
    code, report = cli("syndetic", "triple", "--in", evens, "--in2", bohr)
    assert code == 0
    assert report["result"]["holds"] is True
    c2 = write_json("c2.json", {"table": [[0, 1], [1, 0]], "name": "C2"})
    code, report = cli("syndetic", "pestov", "--in", c2)
    assert code == 0
    assert report["result"]["witness"]["S"] == [0]


def test_unknown_suite_is_a_usage_error(cli):
    assert cli("suite", "bogus") == (2, None)


def test_exhausted_suite_budget(cli):
    code, report = cli("suite", "metric", "--budget", "-1")
    assert code == 1
    assert report["certificates"][0]["property"] == "metric.budget"


def test_usage_errors(cli, write_json):
    assert cli("metric", "validate", "--bogus") == (2, None)
    assert cli("metric", "validate") == (2, None)
    assert cli("flows", "chains") == (2, None)
    assert cli("metric") == (2, None)


def test_malformed_input_file(cli, report_dir):
    path = report_dir / "broken.json"
    path.write_text("[1, 2", encoding="utf-8")
    assert cli("metric", "validate", "--in", str(path)) == (2, None)


def test_domain_error_exits_two(cli, write_json):
    negative = write_json("neg.json", {"n": 2, "d": [["0", "-1"], ["-1", "0"]]})
    assert cli("metric", "validate", "--in", negative) == (2, None)


def test_csv_report(write_json, report_dir):
    path = write_json("pair.json", PAIR)
    out = report_dir / "report.csv"
    argv = ["metric", "validate", "--in", path, "--format", "csv", "--out", str(out)]
    assert run(argv) == 0
    row = out.read_text().splitlines()[1]
    assert row.startswith("metric validate,metric.axioms,pass")


def test_help_and_version_exit_zero(capsys):
    assert run(["--version"]) == 0
    assert run(["metric", "validate", "--help"]) == 0
    assert "urysohn-lab" in capsys.readouterr().out


def test_report_is_canonical_json(cli, write_json, report_dir):
    cli("metric", "validate", "--in", write_json("pair.json", PAIR))
    text = (report_dir / "report.json").read_text()
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


def test_written_report_can_be_reread_and_rechecked(cli, write_json, report_dir):
    path = write_json("bad.json", TRIANGLE_BAD)
    code, _ = cli("metric", "validate", "--in", path)
    report = io_service.load_report(report_dir / "report.json")
    assert report.exit_code == code == 1
    assert io_service.stale_inputs(report, {"in": path}) == []

    (cert,) = report.certificates
    recomputed = validate_metric(TRIANGLE_BAD["d"])
    assert isinstance(recomputed, ViolationReport)
    assert cert.verdict == "fail"
    assert cert.witness["indices"] == list(recomputed.indices)


def test_reread_detects_changed_input(cli, write_json, report_dir):
    path = write_json("pair.json", PAIR)
    cli("metric", "validate", "--in", path)
    report = io_service.load_report(report_dir / "report.json")
    write_json("pair.json", {"n": 2, "d": [["0", "2"], ["2", "0"]]})
    assert io_service.stale_inputs(report, {"in": path}) == ["in"]


def test_reread_rejects_inconsistent_exit_code(cli, write_json, report_dir):
    path = write_json("bad.json", TRIANGLE_BAD)
    cli("metric", "validate", "--in", path)
    out = report_dir / "report.json"
    data = json.loads(out.read_text())
    data["exit_code"] = 0
    out.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(InvalidInputFileError):
        io_service.load_report(out)
