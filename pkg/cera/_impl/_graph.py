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
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from cera._impl._api_types import InputError, StructuralError
from cera._impl._helper import Edge, Metric, VertexId, check_choice, metric_choices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Event:
    vertex: VertexId
    coords: Tuple[float, ...]
    tau: float

    def __post_init__(self) -> None:
        if isinstance(self.vertex, bool) or not isinstance(self.vertex, int):
            raise InputError(f"vertex id must be an integer, got {self.vertex!r}")
        if self.vertex < 0:
            raise InputError(f"vertex id must be nonnegative, got {self.vertex}")
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))
        object.__setattr__(self, "tau", float(self.tau))
        if not math.isfinite(self.tau):
            raise InputError(f"event {self.vertex} has a non-finite time {self.tau}")

    @property
    def dimension(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class AdmissibilityParams:
    delta: float
    epsilon: float
    metric: Metric = "euclidean"

    def __post_init__(self) -> None:
        if not self.delta > 0:
            raise InputError(f"delta must be positive, got {self.delta}")
        if not self.epsilon > 0:
            raise InputError(f"epsilon must be positive, got {self.epsilon}")
        check_choice(self.metric, metric_choices(), "metric")


class CausalGraph:
    """Vertices with timestamps and coordinates plus directed causal edges.

    The constructor enforces unique vertex ids, a shared coordinate dimension,
    no self-loops and no repeated directed pairs. The causal condition itself
    is reported by `validate_causal`.
    """

    def __init__(self, events: Iterable[Event], edges: Iterable[Edge] = ()) -> None:
        by_vertex: Dict[VertexId, Event] = {}
        dimension: Optional[int] = None
        for event in events:
            if event.vertex in by_vertex:
                raise InputError(f"duplicate vertex id {event.vertex}")
            if dimension is None:
                dimension = event.dimension
            elif event.dimension != dimension:
                raise InputError(
                    f"event {event.vertex} has dimension {event.dimension}, expected {dimension}"
                )
            by_vertex[event.vertex] = event
        ordered: List[Edge] = []
        seen = set()
        for u, v in edges:
            edge = (int(u), int(v))
            if edge[0] == edge[1]:
                raise InputError(f"self-loop on vertex {edge[0]}")
            if edge in seen:
                raise InputError(f"duplicate edge {edge}")
            seen.add(edge)
            ordered.append(edge)
        self._events: Mapping[VertexId, Event] = MappingProxyType(by_vertex)
        self._edges = frozenset(seen)
        self._edge_order: Tuple[Edge, ...] = tuple(ordered)
        self._dimension = dimension or 0

    @property
    def events(self) -> Mapping[VertexId, Event]:
        return self._events

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @property
    def edge_order(self) -> Tuple[Edge, ...]:
        """Edges in the order they were supplied."""
        return self._edge_order

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(sorted(self._events))

    @property
    def dimension(self) -> int:
        return self._dimension

    def tau(self, vertex: VertexId) -> float:
        event = self._events.get(vertex)
        if event is None:
            raise StructuralError(f"vertex {vertex} has no event", vertex)
        return event.tau

    def __len__(self) -> int:
        return len(self._events)

    def __repr__(self) -> str:
        return f"<CausalGraph vertices={len(self._events)} edges={len(self._edges)}>"


def validate_causal(graph: CausalGraph) -> List[Edge]:
    """Returns the edges violating tau(u) < tau(v), sorted.

    An empty list certifies the graph is a DAG: a directed cycle would need
    strictly increasing times around a loop.
    """
    violations = []
    for u, v in sorted(graph.edges):
        for vertex in (u, v):
            if vertex not in graph.events:
                raise StructuralError(
                    f"edge ({u}, {v}) references vertex {vertex} without an event",
                    vertex,
                )
        if not graph.tau(u) < graph.tau(v):
            violations.append((u, v))
    return violations


def _distances(a: np.ndarray, b: np.ndarray, metric: Metric) -> np.ndarray:
    # a: (n, d), b: (m, d) -> (n, m)
    diff = np.abs(b[None, :, :] - a[:, None, :])
    if diff.shape[2] == 0:
        return np.zeros(diff.shape[:2])
    if metric == "euclidean":
        return np.sqrt((diff**2).sum(axis=2))
    if metric == "manhattan":
        return diff.sum(axis=2)
    return diff.max(axis=2)


def metric_distance(u: Event, v: Event, metric: Metric = "euclidean") -> float:
    if u.dimension != v.dimension:
        raise InputError(
            f"events {u.vertex} and {v.vertex} have dimensions {u.dimension} and {v.dimension}"
        )
    a = np.array([u.coords], dtype=float).reshape(1, u.dimension)
    b = np.array([v.coords], dtype=float).reshape(1, v.dimension)
    return float(_distances(a, b, metric)[0, 0])


def admissible(u: Event, v: Event, params: AdmissibilityParams) -> bool:
    distance = metric_distance(u, v, params.metric)
    if u.vertex == v.vertex:
        return False
    gap = v.tau - u.tau
    return gap > 0 and gap <= params.delta and distance <= params.epsilon


def build_causal_graph(
    events: Sequence[Event], params: AdmissibilityParams
) -> CausalGraph:
    """Every admissible pair becomes an edge.

    Edges are listed by the position of their source in ``events``, then of their
    target, so edge_order follows the events file.
    """
    # Validates ids and dimensions before the pair scan.
    CausalGraph(events)
    scanned = list(events)
    if not scanned:
        return CausalGraph([])
    dimension = scanned[0].dimension
    coords = np.array([event.coords for event in scanned], dtype=float).reshape(
        len(scanned), dimension
    )
    taus = np.array([event.tau for event in scanned], dtype=float)
    # gap[i, j] = tau_j - tau_i, the same float operation `admissible` performs.
    gap = taus[None, :] - taus[:, None]
    distance = _distances(coords, coords, params.metric)
    mask = (gap > 0) & (gap <= params.delta) & (distance <= params.epsilon)
    np.fill_diagonal(mask, False)
    sources, targets = np.nonzero(mask)
    edges = [
        (scanned[i].vertex, scanned[j].vertex)
        for i, j in zip(sources.tolist(), targets.tolist())
    ]
    logger.debug(
        "admissibility scan over %d events produced %d edges", len(scanned), len(edges)
    )
    return CausalGraph(sorted(scanned, key=lambda event: event.vertex), edges)


def lattice_events(
    taus: Mapping[Tuple[int, ...], float], spacing: float = 1.0
) -> List[Event]:
    """Events on a finite lattice of Z^d, ids assigned in lexicographic point order."""
    if not taus:
        raise InputError("lattice has no points")
    points = sorted(taus)
    dimension = len(points[0])
    if any(len(p) != dimension for p in points):
        raise InputError("lattice points have mixed dimensions")
    return [
        Event(index, tuple(c * spacing for c in point), taus[point])
        for index, point in enumerate(points)
    ]
