"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: io_service.py                                                         │
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

from pathlib import Path
from typing import Any, Dict, List, Type, TypeVar, Union
import csv
import hashlib
import io
import json
import logging

from pydantic import BaseModel, ValidationError

from src.core.exceptions import InvalidInputFileError, UsageError
from src.models.models import FiniteMetricSpace
from src.schemas.metric import MetricSpaceFile
from src.schemas.report import RunReport
from src.services.metric_service import require_metric

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)
PathLike = Union[str, Path]

REPORT_FORMATS = ("json", "csv")


def _first_error_field(exc: ValidationError) -> str:
    errors = exc.errors()
    if not errors:
        return "<root>"
    loc = errors[0].get("loc", ())
    return ".".join(str(part) for part in loc) or "<root>"


def read_json(path: PathLike) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InvalidInputFileError(str(path), "<file>", "file not found")
    except OSError as e:
        raise InvalidInputFileError(str(path), "<file>", str(e))
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputFileError(
            str(path), "<json>", f"{e.msg} at line {e.lineno} column {e.colno}"
        )


def load_model(path: PathLike, model: Type[ModelT]) -> ModelT:
    """Read a JSON file and validate it against `model`"""
    data = read_json(path)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        field = _first_error_field(e)
        message = e.errors()[0].get("msg", "invalid value")
        logger.debug(f"Validation of {path} failed at {field}: {message}")
        raise InvalidInputFileError(str(path), field, message)


def sha256_file(path: PathLike) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def input_digests(paths: Dict[str, PathLike]) -> Dict[str, str]:
    return {name: sha256_file(p) for name, p in sorted(paths.items()) if p}


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_payload(report: RunReport) -> Dict[str, Any]:
    return report.model_dump(mode="json", by_alias=True)


def render_csv(report: RunReport) -> str:
    """One certificate per row"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["command", "property", "verdict", "bound", "witness"])
    for cert in report.certificates:
        writer.writerow(
            [
                report.command,
                cert.property,
                cert.verdict,
                cert.bound or "",
                json.dumps(cert.witness, sort_keys=True),
            ]
        )
    return buffer.getvalue()


def render_report(report: RunReport, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(report_payload(report))
    if fmt == "csv":
        return render_csv(report)
    raise UsageError(f"Unknown report format: {fmt}", details={"format": fmt})


def write_report(report: RunReport, path: PathLike, fmt: str = "json") -> Path:
    path = Path(path)
    text = render_report(report, fmt)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {path}")
    return path


def load_report(path: PathLike) -> RunReport:
    """A written JSON report, revalidated (a failing certificate needs exit 1)"""
    return load_model(path, RunReport)


def stale_inputs(report: RunReport, paths: Dict[str, PathLike]) -> List[str]:
    """Input names whose file no longer matches the digest in the report"""
    current = input_digests(paths)
    names = set(report.inputs) | set(current)
    return sorted(n for n in names if report.inputs.get(n) != current.get(n))


def load_space(path: PathLike) -> FiniteMetricSpace:
    """Metric-space file, checked against the metric axioms"""
    file = load_model(path, MetricSpaceFile)
    return require_metric(file.to_space().d, labels=file.labels)
