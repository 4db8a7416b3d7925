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

from typing import List

import pytest

from cera.sync_api import (
    AnalysisConfig,
    Filtration,
    InvariantViolation,
    LevelRecord,
    OracleCheck,
    bfs_beta0,
    run_analyze,
    run_oracle,
)


def test_bfs_beta0(example_iii: Filtration, lattice: Filtration) -> None:
    assert [bfs_beta0(example_iii, n) for n in range(3)] == [6, 3, 1]
    assert [bfs_beta0(lattice, n) for n in range(5)] == [9, 6, 4, 3, 3]
    incident = lattice.with_vertex_mode("incident")
    assert [bfs_beta0(incident, n) for n in range(1, 5)] == [1, 2, 1, 1]


def test_run_oracle_without_hilbert(example_ii: Filtration) -> None:
    checks = run_oracle(example_ii)
    assert all(check["passed"] for check in checks)
    assert [c["name"] for c in checks if c["name"] == "bridge_theorem"] == [
        "bridge_theorem"
    ] * example_ii.k
    assert not any(c["name"].startswith("hilbert") for c in checks)


def test_run_oracle_incident_uses_the_ledger(example_i: Filtration) -> None:
    checks = run_oracle(example_i.with_vertex_mode("incident"), "input-order", d_max=2)
    names = {c["name"] for c in checks}
    assert "component_ledger" in names
    assert "bridge_theorem" not in names


def test_run_oracle_kinds(example_i: Filtration) -> None:
    seen: List[OracleCheck] = []
    checks = run_oracle(example_i, d_max=1, kinds=("sr",), on_check=seen.append)
    assert seen == checks
    assert {c["name"] for c in checks if c["name"].startswith("hilbert")} == {
        "hilbert_sr[d=0]",
        "hilbert_sr[d=1]",
    }


def test_run_oracle_rejects_a_tampered_report(example_i: Filtration) -> None:
    report = run_analyze(AnalysisConfig(input="<memory>"), example_i)
    records: List[LevelRecord] = [dict(r) for r in report.levels]  # type: ignore
    records[0]["beta0"] = 3
    with pytest.raises(InvariantViolation, match="report.beta0"):
        run_oracle(example_i, records=records)
