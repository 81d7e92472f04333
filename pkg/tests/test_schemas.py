"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_schemas.py                                                       │
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

import pytest
from pydantic import ValidationError

from src.models.models import SelfMap
from src.schemas.flows import ActionFile, LaminarFamilyFile, SelfMapListFile
from src.schemas.katetov import FullStrategy, KatetovFunctionFile, SampledStrategy
from src.schemas.metric import MetricSpaceFile
from src.schemas.report import RunReport, certificate
from src.schemas.roelcke import BiKatetovMatrixFile, StaircaseFile
from src.schemas.syndetic import BohrSpecFile, WindowSetFile
from src.services.metric_service import line_space


def test_failing_certificate_needs_exit_code_one():
    failing = certificate("metric.axioms", False)
    with pytest.raises(ValidationError):
        RunReport(command="metric validate", certificates=[failing])
    report = RunReport(command="metric validate", certificates=[failing], exit_code=1)
    assert report.exit_code == 1


def test_certificates_are_sorted():
    report = RunReport(
        command="suite all",
        certificates=[certificate("b.x", True), certificate("a.y", True)],
    )
    assert [c.property for c in report.certificates] == ["a.y", "b.x"]
    assert report.model_dump(by_alias=True)["schema"] == "1"


def test_metric_space_file_writes_canonical_rationals():
    space = line_space([0, Fraction(1, 2), 2])
    file = MetricSpaceFile.from_space(space)
    assert file.d[0] == ["0", "1/2", "2"]
    assert file.to_space().d == space.d


def test_metric_space_file_shape():
    with pytest.raises(ValidationError):
        MetricSpaceFile(n=2, d=[["0", "1"]])
    with pytest.raises(ValidationError):
        MetricSpaceFile(n=1, d=[["0"]], labels=["a", "b"])
    with pytest.raises(ValidationError):
        MetricSpaceFile(n=1, d=[[0.5]])


def test_katetov_function_file_sorts_base(line):
    f = KatetovFunctionFile(base=[2, 0], values=["2", 1]).to_function(line)
    assert f.support == (0, 2)
    assert f.values == (1, 2)
    with pytest.raises(ValidationError):
        KatetovFunctionFile(base=[0, 0], values=["1", "1"])


def test_strategies_parse_rationals():
    strategy = SampledStrategy(delta="1/4", cap=1, count=3)
    assert strategy.delta == Fraction(1, 4)
    assert strategy.kind == "sampled"
    assert FullStrategy(delta="1/2", cap="1").max_subset == 3


def test_bikatetov_file_shape():
    space = MetricSpaceFile(n=2, d=[["0", "1"], ["1", "0"]])
    file = BiKatetovMatrixFile(left=space, right=space, p=[[0, 1], [1, 0]])
    assert file.entries()[0][1] == 1
    with pytest.raises(ValidationError):
        BiKatetovMatrixFile(left=space, right=space, p=[[0, 1]])


def test_staircase_file_cells():
    rel = StaircaseFile(n=1, cells=[[0, 0], [1, 0], [1, 1]]).to_relation()
    assert StaircaseFile.from_relation(rel).cells == [[0, 0], [1, 0], [1, 1]]
    with pytest.raises(ValidationError):
        StaircaseFile(n=1, cells=[[0, 0, 0]])


def test_selfmap_files():
    assert SelfMapListFile(n=2, generators=[[1, 0]]).to_maps() == [SelfMap((1, 0))]
    with pytest.raises(ValidationError):
        SelfMapListFile(n=2, generators=[[2, 0]])
    with pytest.raises(ValidationError):
        ActionFile(n=2, generators=[[0, 0]])
    with pytest.raises(ValidationError):
        LaminarFamilyFile(n=2, family=[[0], [1], [0, 1]], generators=[[1, 1]])


def test_window_and_bohr_files():
    assert WindowSetFile(window=3, members=[2, -1, 2]).to_set().members == (-1, 2)
    with pytest.raises(ValidationError):
        WindowSetFile(window=3, members=[4])
    spec = BohrSpecFile(thetas=["1/2"], eps=1).to_spec()
    assert spec.frequencies == (Fraction(1, 2),)
    with pytest.raises(ValidationError):
        BohrSpecFile(thetas=["3/2"], eps="1")
    with pytest.raises(ValidationError):
        BohrSpecFile(thetas=[], eps="0")
