# Copyright (c) The cera authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pyee import EventEmitter

from cera._impl._api_structures import (
    ConfigEcho,
    HilbertRecord,
    LevelRecord,
    OracleCheck,
)
from cera._impl._api_types import Error, InputError
from cera._impl._cera import hilbert_table
from cera._impl._connectivity import classify_filtration, verify_bridge_theorem
from cera._impl._filtration import Filtration, underlying_undirected
from cera._impl._graph import AdmissibilityParams
from cera._impl._helper import (
    HilbertKind,
    InputKind,
    Metric,
    OrderPolicy,
    ReportFormat,
    VertexMode,
    check_choice,
    order_policy_choices,
    serialize_int,
    vertex_mode_choices,
)
from cera._impl._hilbert import GradedDimTable
from cera._impl._io import PathLike, load_filtration
from cera._impl._oracle import run_oracle
from cera._impl._simplicial import sr_hilbert_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    input: str
    input_kind: InputKind = "auto"
    delta: float = 1.0
    epsilon: float = 1.0
    metric: Metric = "euclidean"
    vertex_mode: VertexMode = "full"
    order_policy: OrderPolicy = "lex"
    grid: Union[str, Tuple[float, ...]] = "auto"
    d_max: Optional[int] = None
    hilbert: Tuple[HilbertKind, ...] = ("edge", "sr")
    oracle: bool = False

    def __post_init__(self) -> None:
        check_choice(self.input_kind, ("auto", "events", "edges"), "input_kind")
        check_choice(self.vertex_mode, vertex_mode_choices(), "vertex_mode")
        check_choice(self.order_policy, order_policy_choices(), "order_policy")
        AdmissibilityParams(self.delta, self.epsilon, self.metric)
        if isinstance(self.grid, str):
            check_choice(self.grid, ("auto",), "grid")
        else:
            object.__setattr__(self, "grid", tuple(float(t) for t in self.grid))
        if self.d_max is not None and self.d_max < 0:
            raise InputError(f"d_max must be nonnegative, got {self.d_max}")
        for kind in self.hilbert:
            check_choice(kind, ("edge", "sr"), "hilbert")
        object.__setattr__(self, "hilbert", tuple(self.hilbert))

    @property
    def params(self) -> AdmissibilityParams:
        return AdmissibilityParams(self.delta, self.epsilon, self.metric)

    def echo(self) -> ConfigEcho:
        return ConfigEcho(
            input=self.input,
            input_kind=self.input_kind,
            delta=self.delta,
            epsilon=self.epsilon,
            metric=self.metric,
            vertex_mode=self.vertex_mode,
            order_policy=self.order_policy,
            grid=self.grid if isinstance(self.grid, str) else list(self.grid),
            d_max=self.d_max,
            hilbert=list(self.hilbert),
            oracle=self.oracle,
        )


def hilbert_record(table: GradedDimTable) -> HilbertRecord:
    return HilbertRecord(
        kind=table.kind,
        d_max=table.d_max,
        cells=[[serialize_int(c) for c in row] for row in table.cells],
    )


@dataclass
class AnalysisReport:
    config: ConfigEcho
    levels: List[LevelRecord]
    bridge_polynomial: List[int]
    hilbert: Dict[str, HilbertRecord] = field(default_factory=dict)
    oracle: List[OracleCheck] = field(default_factory=list)
    filtration: Optional[Filtration] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config,
            "levels": self.levels,
            "bridge_polynomial": self.bridge_polynomial,
            "hilbert": self.hilbert,
            "oracle": self.oracle,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnalysisReport":
        try:
            return cls(
                config=data["config"],
                levels=data["levels"],
                bridge_polynomial=data["bridge_polynomial"],
                hilbert=data.get("hilbert", {}),
                oracle=data.get("oracle", []),
            )
        except KeyError as e:
            raise InputError(f"report is missing {e}")

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise InputError(f"invalid report JSON: {e.msg}", line=e.lineno)


class Analyzer(EventEmitter):
    """Runs one analysis, emitting "level", "oracle" and "done" as it goes."""

    def __init__(self, config: AnalysisConfig) -> None:
        super().__init__()
        self._config = config

    @property
    def config(self) -> AnalysisConfig:
        return self._config

    def load(self) -> Filtration:
        c = self._config
        return load_filtration(c.input, c.input_kind, c.params, c.grid, c.vertex_mode)

    def run(self, filtration: Optional[Filtration] = None) -> AnalysisReport:
        c = self._config
        if filtration is None:
            filtration = self.load()
        else:
            filtration = filtration.with_vertex_mode(c.vertex_mode)
        levels = self.level_records(filtration)
        report = AnalysisReport(
            config=c.echo(),
            levels=levels,
            bridge_polynomial=[r["dim_B"] for r in levels],
            filtration=filtration,
        )
        if c.d_max is not None:
            for table in self.hilbert_tables(filtration):
                report.hilbert[table.kind] = hilbert_record(table)
        if c.oracle:
            report.oracle = run_oracle(
                filtration,
                c.order_policy,
                c.d_max,
                c.hilbert,
                levels,
                on_check=lambda check: self.emit("oracle", check),
            )
        self.emit("done", report)
        return report

    def level_records(self, filtration: Filtration) -> List[LevelRecord]:
        records = []
        policy = self._config.order_policy
        checks = verify_bridge_theorem(filtration, policy)
        for c, check in zip(classify_filtration(filtration, policy), checks):
            record = LevelRecord(
                n=c.level,
                t_n=filtration.instant(c.level),
                edges=len(filtration.edges(c.level)),
                beta0=c.beta0_after,
                dim_B=c.dim_b,
                dim_C=c.dim_c,
                dim_R=c.dim_r,
                theorem_holds=check.holds,
                discrepancy=check.discrepancy,
                bridges=[list(e) for e in c.bridges],
            )
            self.emit("level", record)
            records.append(record)
        return records

    def hilbert_tables(self, filtration: Filtration) -> List[GradedDimTable]:
        d_max = self._config.d_max
        assert d_max is not None
        tables = []
        if "edge" in self._config.hilbert:
            tables.append(hilbert_table(filtration, d_max))
        if "sr" in self._config.hilbert:
            tables.append(sr_hilbert_table(filtration, d_max))
        return tables


def run_analyze(
    config: AnalysisConfig, filtration: Optional[Filtration] = None
) -> AnalysisReport:
    return Analyzer(config).run(filtration)


def _csv_text(rows: Sequence[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue()


def _csv_files(report: AnalysisReport) -> Dict[str, str]:
    config_rows: List[List[Any]] = [["key", "value"]]
    for key, value in sorted(report.config.items()):
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        config_rows.append([key, "" if value is None else value])
    level_columns = [
        "n", "t_n", "edges", "beta0", "dim_B", "dim_C", "dim_R", "theorem_holds", "discrepancy"
    ]
    level_rows: List[List[Any]] = [level_columns + ["bridges"]]
    for record in report.levels:
        fields: Dict[str, Any] = dict(record)
        row = [fields[column] for column in level_columns]
        row.append(" ".join(f"{u}-{v}" for u, v in record["bridges"]))
        level_rows.append(row)
    files = {
        "config.csv": _csv_text(config_rows),
        "levels.csv": _csv_text(level_rows),
        "bridge_polynomial.csv": _csv_text(
            [["n", "coefficient"]]
            + [[n, c] for n, c in enumerate(report.bridge_polynomial, start=1)]
        ),
    }
    for kind, table in sorted(report.hilbert.items()):
        header = ["n"] + [f"d{d}" for d in range(table["d_max"] + 1)]
        files[f"hilbert_{kind}.csv"] = _csv_text(
            [header] + [[n] + list(row) for n, row in enumerate(table["cells"])]
        )
    return files


def _dot_files(report: AnalysisReport) -> Dict[str, str]:
    filtration = report.filtration
    if filtration is None:
        raise InputError("dot output needs the analysed filtration")
    files = {}
    for record in report.levels:
        n = record["n"]
        bridges = {(min(u, v), max(u, v)) for u, v in record["bridges"]}
        graph = underlying_undirected(filtration, n)
        lines = [f"graph level_{n} {{"]
        lines.extend(f"  {v};" for v in sorted(graph.vertices))
        for u, v in sorted(graph.undirected_edges):
            style = " [color=red, style=bold]" if (u, v) in bridges else ""
            lines.append(f"  {u} -- {v}{style};")
        lines.append("}")
        files[f"level_{n}.dot"] = "\n".join(lines) + "\n"
    return files


def emit(report: AnalysisReport, fmt: ReportFormat, out_dir: PathLike) -> List[Path]:
    check_choice(fmt, ("json", "csv", "dot"), "format")
    if fmt == "json":
        files = {"report.json": report.to_json()}
    elif fmt == "csv":
        files = _csv_files(report)
    else:
        files = _dot_files(report)
    written = []
    try:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            path = Path(out_dir) / name
            path.write_text(text, encoding="utf-8")
            written.append(path)
    except OSError as e:
        raise Error(f"cannot write report to {out_dir}: {e.strerror or e}")
    logger.info("wrote %d %s files to %s", len(written), fmt, out_dir)
    return written
