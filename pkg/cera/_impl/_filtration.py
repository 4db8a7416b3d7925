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

import bisect
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from cera._impl._api_types import InputError
from cera._impl._graph import CausalGraph, validate_causal
from cera._impl._helper import (
    Edge,
    VertexId,
    VertexMode,
    check_choice,
    undirected,
    vertex_mode_choices,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeGrid:
    instants: Tuple[float, ...]

    def __post_init__(self) -> None:
        instants = tuple(float(t) for t in self.instants)
        if not instants:
            raise InputError("time grid is empty")
        for earlier, later in zip(instants, instants[1:]):
            if not earlier < later:
                raise InputError(
                    f"time grid must be strictly increasing, got {earlier} before {later}"
                )
        object.__setattr__(self, "instants", instants)

    def __len__(self) -> int:
        return len(self.instants)

    def level_of(self, time: float) -> Optional[int]:
        """Smallest level n with time <= t_n, or None past the last instant."""
        index = bisect.bisect_left(self.instants, time)
        if index == len(self.instants):
            return None
        return index + 1


@dataclass(frozen=True)
class LevelGraph:
    level: int
    vertices: FrozenSet[VertexId]
    undirected_edges: FrozenSet[Edge]

    def adjacency(self) -> Dict[VertexId, FrozenSet[VertexId]]:
        neighbours: Dict[VertexId, set] = {v: set() for v in self.vertices}
        for u, v in self.undirected_edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return {v: frozenset(n) for v, n in neighbours.items()}


class Filtration:
    """Cumulative edge sets E_1 ⊆ … ⊆ E_k.

    Stored as the arrival level of every edge, so monotonicity holds by
    construction: E_n = {e : arrival(e) <= n}. Level 0 is the empty edge set
    and every n >= k reads E_k.
    """

    def __init__(
        self,
        arrivals: Mapping[Edge, int],
        num_levels: int,
        vertices: Optional[Iterable[VertexId]] = None,
        vertex_mode: VertexMode = "full",
        graph: Optional[CausalGraph] = None,
        grid: Optional[TimeGrid] = None,
        edge_order: Optional[Sequence[Edge]] = None,
    ) -> None:
        check_choice(vertex_mode, vertex_mode_choices(), "vertex_mode")
        if num_levels < 1:
            raise InputError("filtration has no levels")
        seen_undirected: Dict[Edge, Edge] = {}
        for edge, level in arrivals.items():
            if not 1 <= level <= num_levels:
                raise InputError(
                    f"edge {edge} arrives at level {level}, outside 1..{num_levels}"
                )
            if edge[0] == edge[1]:
                raise InputError(f"self-loop on vertex {edge[0]}")
            key = undirected(edge)
            if key in seen_undirected:
                raise InputError(
                    f"edges {seen_undirected[key]} and {edge} join the same pair"
                )
            seen_undirected[key] = edge
        endpoints = {v for edge in arrivals for v in edge}
        universe = set(vertices) if vertices is not None else set(endpoints)
        missing = endpoints - universe
        if missing:
            raise InputError(
                f"edge endpoints {sorted(missing)} are outside the vertex universe"
            )
        order = list(edge_order) if edge_order is not None else sorted(arrivals)
        if set(order) != set(arrivals) or len(order) != len(arrivals):
            raise InputError("edge order must list every filtration edge exactly once")

        self._arrivals: Mapping[Edge, int] = MappingProxyType(dict(arrivals))
        self._num_levels = num_levels
        self._vertices = frozenset(universe)
        self._vertex_mode: VertexMode = vertex_mode
        self._graph = graph
        self._grid = grid
        self._edge_order: Tuple[Edge, ...] = tuple(order)
        self._levels: Tuple[FrozenSet[Edge], ...] = tuple(
            frozenset(e for e, level in arrivals.items() if level <= n)
            for n in range(num_levels + 1)
        )

    @property
    def k(self) -> int:
        return self._num_levels

    @property
    def vertices(self) -> FrozenSet[VertexId]:
        """The vertex universe V, regardless of vertex mode."""
        return self._vertices

    @property
    def vertex_mode(self) -> VertexMode:
        return self._vertex_mode

    @property
    def graph(self) -> Optional[CausalGraph]:
        return self._graph

    @property
    def grid(self) -> Optional[TimeGrid]:
        return self._grid

    @property
    def arrivals(self) -> Mapping[Edge, int]:
        return self._arrivals

    @property
    def edge_order(self) -> Tuple[Edge, ...]:
        return self._edge_order

    @property
    def levels(self) -> Tuple[FrozenSet[Edge], ...]:
        """E_1, …, E_k."""
        return self._levels[1:]

    def edges(self, n: int) -> FrozenSet[Edge]:
        if n < 0:
            raise InputError(f"level {n} is negative")
        return self._levels[min(n, self._num_levels)]

    def instant(self, n: int) -> Optional[float]:
        if self._grid is None or not 1 <= n <= self._num_levels:
            return None
        return self._grid.instants[n - 1]

    def with_vertex_mode(self, vertex_mode: VertexMode) -> "Filtration":
        return Filtration(
            self._arrivals,
            self._num_levels,
            self._vertices,
            vertex_mode,
            self._graph,
            self._grid,
            self._edge_order,
        )

    def check_range(self, n: int, low: int = 0) -> None:
        if not low <= n <= self._num_levels:
            raise InputError(f"level {n} is outside {low}..{self._num_levels}")

    def __repr__(self) -> str:
        return (
            f"<Filtration levels={self._num_levels} edges={len(self._arrivals)} "
            f"vertices={len(self._vertices)} mode={self._vertex_mode}>"
        )


def build_filtration(
    graph: CausalGraph, grid: TimeGrid, vertex_mode: VertexMode = "full"
) -> Filtration:
    violations = validate_causal(graph)
    if violations:
        raise InputError(f"graph violates the causal condition on {violations}")
    arrivals: Dict[Edge, int] = {}
    dropped = 0
    for u, v in graph.edge_order:
        level = grid.level_of(graph.tau(v))
        if level is None:
            dropped += 1
            continue
        arrivals[(u, v)] = level
    if dropped:
        logger.info("%d edges arrive after the last grid instant", dropped)
    return Filtration(
        arrivals,
        len(grid),
        graph.vertices,
        vertex_mode,
        graph=graph,
        grid=grid,
        edge_order=[e for e in graph.edge_order if e in arrivals],
    )


def level_diff(filtration: Filtration, n: int) -> FrozenSet[Edge]:
    filtration.check_range(n, low=1)
    return filtration.edges(n) - filtration.edges(n - 1)


def level_vertices(filtration: Filtration, n: int) -> FrozenSet[VertexId]:
    if filtration.vertex_mode == "full":
        return filtration.vertices
    return frozenset(v for edge in filtration.edges(n) for v in edge)


def underlying_undirected(filtration: Filtration, n: int) -> LevelGraph:
    filtration.check_range(n)
    return LevelGraph(
        n,
        level_vertices(filtration, n),
        frozenset(undirected(edge) for edge in filtration.edges(n)),
    )


def auto_grid(graph: CausalGraph) -> TimeGrid:
    if len(graph) == 0:
        raise InputError("cannot derive a time grid from an empty graph")
    targets = sorted({graph.tau(v) for _, v in graph.edges})
    if not targets:
        return TimeGrid((max(event.tau for event in graph.events.values()),))
    return TimeGrid(tuple(targets))


def aggregate_filtration(filtration: Filtration) -> Filtration:
    """The single-level filtration on E_k, forgetting arrival times."""
    return Filtration(
        {edge: 1 for edge in filtration.arrivals},
        1,
        filtration.vertices,
        filtration.vertex_mode,
        graph=filtration.graph,
        edge_order=filtration.edge_order,
    )


def from_edge_levels(
    rows: Iterable[Tuple[VertexId, VertexId, int]],
    num_levels: Optional[int] = None,
    vertices: Optional[Iterable[VertexId]] = None,
    vertex_mode: VertexMode = "full",
    grid: Optional[TimeGrid] = None,
) -> Filtration:
    """Assembles a filtration from level-tagged edges, bypassing times."""
    arrivals: Dict[Edge, int] = {}
    order: List[Edge] = []
    for u, v, level in rows:
        edge = (u, v)
        if edge in arrivals:
            raise InputError(f"edge {edge} is listed twice")
        if level < 1:
            raise InputError(f"edge {edge} has level {level}, levels start at 1")
        arrivals[edge] = level
        order.append(edge)
    top = max(arrivals.values(), default=0)
    if num_levels is None:
        num_levels = top
    elif num_levels < top:
        raise InputError(f"edges reach level {top} but only {num_levels} levels declared")
    if grid is not None and len(grid) != num_levels:
        raise InputError(f"grid has {len(grid)} instants for {num_levels} levels")
    return Filtration(
        arrivals, num_levels, vertices, vertex_mode, grid=grid, edge_order=order
    )
