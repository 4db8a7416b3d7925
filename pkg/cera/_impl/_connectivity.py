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
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from cera._impl._api_types import InvariantViolation
from cera._impl._filtration import Filtration, level_diff, level_vertices
from cera._impl._helper import (
    Edge,
    EdgeClass,
    OrderPolicy,
    check_choice,
    order_policy_choices,
    undirected,
)
from cera._impl._monomial import Monomial
from cera._impl._union_find import UnionFind

logger = logging.getLogger(__name__)


def component_state(filtration: Filtration, n: int) -> UnionFind:
    """Union-find over the level-n vertex set with every edge of E_n merged."""
    filtration.check_range(n)
    state = UnionFind(level_vertices(filtration, n))
    for u, v in filtration.edges(n):
        state.union(u, v)
    return state


def beta0(filtration: Filtration, n: int) -> int:
    return component_state(filtration, n).count


@dataclass(frozen=True)
class LevelClassification:
    level: int
    # Insertion order is the processing order.
    classified: Dict[Edge, EdgeClass]
    beta0_before: int
    beta0_after: int

    def _count(self, edge_class: EdgeClass) -> int:
        return sum(1 for c in self.classified.values() if c == edge_class)

    @property
    def dim_b(self) -> int:
        return self._count("bridge")

    @property
    def dim_c(self) -> int:
        return self._count("cycle")

    @property
    def dim_r(self) -> int:
        return self.expansions + self.creations

    @property
    def expansions(self) -> int:
        return self._count("expansion")

    @property
    def creations(self) -> int:
        return self._count("creation")

    @property
    def beta0_drop(self) -> int:
        return self.beta0_before - self.beta0_after

    @property
    def bridges(self) -> List[Edge]:
        return [e for e, c in self.classified.items() if c == "bridge"]

    @property
    def bridge_monomials(self) -> List[Monomial]:
        """x_u x_v for every bridge; their classes span B_n."""
        return [Monomial.from_vars(u, v) for u, v in self.bridges]


def _processing_order(
    filtration: Filtration, diff: frozenset, order_policy: OrderPolicy
) -> List[Edge]:
    if order_policy == "lex":
        return sorted(diff, key=lambda e: (undirected(e), e))
    return [e for e in filtration.edge_order if e in diff]


def classify_level_edges(
    filtration: Filtration, n: int, order_policy: OrderPolicy = "lex"
) -> LevelClassification:
    check_choice(order_policy, order_policy_choices(), "order_policy")
    filtration.check_range(n, low=1)
    state = component_state(filtration, n - 1)
    before = state.count
    classified: Dict[Edge, EdgeClass] = {}
    for u, v in _processing_order(filtration, level_diff(filtration, n), order_policy):
        new_u, new_v = u not in state, v not in state
        state.add(u)
        state.add(v)
        merged = state.union(u, v)
        if new_u and new_v:
            classified[(u, v)] = "creation"
        elif new_u or new_v:
            classified[(u, v)] = "expansion"
        else:
            classified[(u, v)] = "bridge" if merged else "cycle"
    result = LevelClassification(n, classified, before, state.count)

    expected = beta0(filtration, n)
    if result.beta0_after != expected:
        raise InvariantViolation(
            f"level {n}: replay ends with {result.beta0_after} components, "
            f"recount gives {expected}"
        )
    if result.beta0_after != before + result.creations - result.dim_b:
        raise InvariantViolation(f"level {n}: component ledger does not balance")
    if result.dim_b + result.dim_c + result.dim_r != len(classified):
        raise InvariantViolation(f"level {n}: edge classes do not partition the level")
    logger.debug(
        "level %d: %d bridges, %d cycles, %d expansions, %d creations",
        n,
        result.dim_b,
        result.dim_c,
        result.expansions,
        result.creations,
    )
    return result


def classify_filtration(
    filtration: Filtration, order_policy: OrderPolicy = "lex"
) -> List[LevelClassification]:
    return [
        classify_level_edges(filtration, n, order_policy)
        for n in range(1, filtration.k + 1)
    ]


@dataclass(frozen=True)
class BridgePolynomial:
    """P(t) = sum of c_n t^n for n = 1..k, with c_n = dim B_n."""

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    def coefficient(self, n: int) -> int:
        if 1 <= n <= len(self.coefficients):
            return self.coefficients[n - 1]
        return 0

    def evaluate(self, t: Union[int, float]) -> Union[int, float]:
        return sum(c * t**n for n, c in enumerate(self.coefficients, start=1))

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients, start=1):
            if c == 0:
                continue
            power = "t" if n == 1 else f"t^{n}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"


def bridge_polynomial(
    filtration: Filtration, order_policy: OrderPolicy = "lex"
) -> BridgePolynomial:
    return BridgePolynomial(
        tuple(c.dim_b for c in classify_filtration(filtration, order_policy))
    )


@dataclass(frozen=True)
class BridgeTheoremCheck:
    level: int
    dim_b: int
    beta0_drop: int
    holds: bool
    discrepancy: int


def verify_bridge_theorem(
    filtration: Filtration, order_policy: OrderPolicy = "lex"
) -> List[BridgeTheoremCheck]:
    """dim B_n against the drop in β₀, per level.

    In full mode the two always agree. In incident mode the difference is the
    number of components created at that level.
    """
    checks = []
    for c in classify_filtration(filtration, order_policy):
        discrepancy = c.dim_b - c.beta0_drop
        check = BridgeTheoremCheck(c.level, c.dim_b, c.beta0_drop, discrepancy == 0, discrepancy)
        if filtration.vertex_mode == "full" and not check.holds:
            raise InvariantViolation(
                f"level {c.level}: dim B = {c.dim_b} but β₀ drops by {c.beta0_drop}"
            )
        if discrepancy != c.creations:
            raise InvariantViolation(
                f"level {c.level}: discrepancy {discrepancy} differs from "
                f"{c.creations} created components"
            )
        checks.append(check)
    return checks
