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

import logging
from typing import Callable, List, Optional, Sequence

import networkx as nx

from cera._impl._api_structures import LevelRecord, OracleCheck
from cera._impl._api_types import InvariantViolation
from cera._impl._cera import check_multiplicative_closure, edge_ideal
from cera._impl._connectivity import beta0, classify_filtration
from cera._impl._filtration import Filtration, level_vertices
from cera._impl._helper import HilbertKind, OrderPolicy, serialize_int
from cera._impl._hilbert import brute_force_graded_dim, graded_dim, monomial_count
from cera._impl._simplicial import (
    brute_force_quotient_hilbert,
    check_bigraded_closure,
    clique_filtration,
    sr_hilbert_cell,
)

logger = logging.getLogger(__name__)


def bfs_beta0(filtration: Filtration, n: int) -> int:
    """Connected components of G_n* by graph search, independent of the union-find."""
    filtration.check_range(n)
    graph = nx.Graph()
    graph.add_nodes_from(level_vertices(filtration, n))
    graph.add_edges_from(filtration.edges(n))
    return nx.number_connected_components(graph)


class _Recorder:
    def __init__(self, on_check: Optional[Callable[[OracleCheck], None]]) -> None:
        self.checks: List[OracleCheck] = []
        self._on_check = on_check

    def __call__(self, name: str, level: Optional[int], expected: int, actual: int) -> None:
        check = OracleCheck(
            name=name,
            level=level,
            expected=serialize_int(expected),
            actual=serialize_int(actual),
            passed=expected == actual,
        )
        self.checks.append(check)
        if self._on_check:
            self._on_check(check)
        if not check["passed"]:
            raise InvariantViolation(
                f"oracle check {name} at level {level}: expected {expected}, got {actual}"
            )


def run_oracle(
    filtration: Filtration,
    order_policy: OrderPolicy = "lex",
    d_max: Optional[int] = None,
    kinds: Sequence[HilbertKind] = ("edge", "sr"),
    records: Optional[Sequence[LevelRecord]] = None,
    on_check: Optional[Callable[[OracleCheck], None]] = None,
) -> List[OracleCheck]:
    """Recomputes every reported quantity a second way. The first mismatch raises."""
    record = _Recorder(on_check)
    searched = [bfs_beta0(filtration, n) for n in range(filtration.k + 1)]
    for n in range(filtration.k + 1):
        record("beta0", n, searched[n], beta0(filtration, n))
    for r in records or ():
        record("report.beta0", r["n"], searched[r["n"]], r["beta0"])

    for c in classify_filtration(filtration, order_policy):
        drop = searched[c.level - 1] - searched[c.level]
        if filtration.vertex_mode == "full":
            record("bridge_theorem", c.level, drop, c.dim_b)
        else:
            record("component_ledger", c.level, drop, c.dim_b - c.creations)

    if d_max is not None:
        if "edge" in kinds:
            for n in range(filtration.k + 1):
                ideal = edge_ideal(filtration, n)
                for d in range(d_max + 1):
                    record(
                        f"hilbert_edge[d={d}]",
                        n,
                        brute_force_graded_dim(ideal, d),
                        graded_dim(ideal, d),
                    )
        if "sr" in kinds:
            for n, complex in enumerate(clique_filtration(filtration).complexes):
                size = len(complex.vertex_set)
                for d in range(d_max + 1):
                    enumerated = monomial_count(size, d) - brute_force_quotient_hilbert(complex, d)
                    record(f"hilbert_sr[d={d}]", n, enumerated, sr_hilbert_cell(complex, d))

    record("multiplicative_closure", None, 1, int(check_multiplicative_closure(filtration)))
    record(
        "bigraded_closure", None, 1, int(check_bigraded_closure(clique_filtration(filtration)))
    )
    logger.info("oracle passed %d checks", len(record.checks))
    return record.checks
