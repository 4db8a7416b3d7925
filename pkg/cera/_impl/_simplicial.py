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
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from cera._impl._api_types import InputError, InvariantViolation
from cera._impl._filtration import Filtration, LevelGraph, underlying_undirected
from cera._impl._helper import VertexId
from cera._impl._hilbert import (
    GradedDimTable,
    brute_force_face_support_count,
    graded_dim,
    hilbert_from_f_vector,
    monomial_count,
)
from cera._impl._monomial import Monomial, MonomialIdeal

logger = logging.getLogger(__name__)

Face = FrozenSet[VertexId]

# faces() refuses complexes on more vertices than this; counts never list faces.
MATERIALIZE_LIMIT = 25

SRIdeal = MonomialIdeal


class SimplicialComplex:
    """A downward-closed face family stored through its facets.

    Every vertex of vertex_set is a face, and so is the empty set.
    """

    def __init__(
        self, vertex_set: Iterable[VertexId], facets: Iterable[Iterable[VertexId]] = ()
    ) -> None:
        vertices = frozenset(vertex_set)
        candidates = {frozenset(f) for f in facets}
        for facet in candidates:
            outside = facet - vertices
            if outside:
                raise InputError(f"face uses vertices {sorted(outside)} outside the complex")
        covered: Set[VertexId] = set().union(*candidates) if candidates else set()
        candidates.update(frozenset([v]) for v in vertices - covered)
        candidates.discard(frozenset())
        self._facets = frozenset(
            f for f in candidates if not any(f < other for other in candidates)
        )
        self._vertex_set = vertices

    @classmethod
    def simplex(cls, vertices: Iterable[VertexId]) -> "SimplicialComplex":
        vertex_set = frozenset(vertices)
        return cls(vertex_set, [vertex_set] if vertex_set else [])

    @property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return self._vertex_set

    @property
    def facets(self) -> FrozenSet[Face]:
        return self._facets

    @property
    def dim(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    def is_face(self, candidate: Iterable[VertexId]) -> bool:
        face = frozenset(candidate)
        if not face:
            return True
        return any(face <= facet for facet in self._facets)

    def faces_of_size(self, size: int) -> Set[Face]:
        if size == 0:
            return {frozenset()}
        return {
            frozenset(c)
            for facet in self._facets
            if len(facet) >= size
            for c in combinations(sorted(facet), size)
        }

    def faces(self) -> Iterator[Face]:
        if len(self._vertex_set) > MATERIALIZE_LIMIT:
            raise InputError(
                f"refusing to list every face of a complex on {len(self._vertex_set)} vertices"
            )
        for size in range(self.dim + 2):
            yield from sorted(self.faces_of_size(size), key=sorted)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self._vertex_set <= other._vertex_set and all(
            other.is_face(f) for f in self._facets
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertex_set == other._vertex_set and self._facets == other._facets

    def __hash__(self) -> int:
        return hash((self._vertex_set, self._facets))

    def __repr__(self) -> str:
        return f"<SimplicialComplex vertices={len(self._vertex_set)} dim={self.dim}>"


@dataclass(frozen=True)
class FVector:
    """(f_-1, f_0, …, f_dim), where f_{i-1} counts faces of cardinality i."""

    f: Tuple[int, ...]

    def by_cardinality(self, size: int) -> int:
        return self.f[size] if 0 <= size < len(self.f) else 0

    def __getitem__(self, dimension: int) -> int:
        return self.by_cardinality(dimension + 1)

    def __len__(self) -> int:
        return len(self.f)


def clique_complex(level_graph: LevelGraph) -> SimplicialComplex:
    graph = nx.Graph()
    graph.add_nodes_from(level_graph.vertices)
    graph.add_edges_from(level_graph.undirected_edges)
    # Bron-Kerbosch with pivoting; isolated vertices come back as singletons.
    facets = [frozenset(clique) for clique in nx.find_cliques(graph)]
    return SimplicialComplex(level_graph.vertices, facets)


def f_vector(complex: SimplicialComplex) -> FVector:
    """Face counts by cardinality, without listing faces.

    Inclusion-exclusion over the facets: the faces of size i inside facets F and G
    are exactly those inside F & G, so each distinct facet intersection carries a
    signed weight and contributes weight * comb(|intersection|, i).
    """
    weights: Dict[Face, int] = {}
    for facet in sorted(complex.facets, key=sorted):
        update: Dict[Face, int] = {facet: 1}
        for face, weight in weights.items():
            meet = face & facet
            if meet:
                update[meet] = update.get(meet, 0) - weight
        for face, weight in update.items():
            weights[face] = weights.get(face, 0) + weight
        weights = {face: weight for face, weight in weights.items() if weight}
    counts = [1]
    for size in range(1, complex.dim + 2):
        counts.append(sum(weight * comb(len(face), size) for face, weight in weights.items()))
    return FVector(tuple(counts))


def minimal_nonfaces(complex: SimplicialComplex) -> Set[Face]:
    """Inclusion-minimal non-faces.

    S is a non-face exactly when it meets the complement of every facet, so the
    minimal non-faces are the minimal transversals of those complements.
    """
    if not complex.facets:
        return set()
    transversals: Set[Face] = {frozenset()}
    for facet in sorted(complex.facets, key=sorted):
        complement = complex.vertex_set - facet
        extended: Set[Face] = set()
        for transversal in transversals:
            if transversal & complement:
                extended.add(transversal)
            else:
                extended.update(transversal | {v} for v in complement)
        transversals = _inclusion_minimal(extended)
        if not transversals:
            break
    return transversals


def _inclusion_minimal(sets: Set[Face]) -> Set[Face]:
    kept: List[Face] = []
    for candidate in sorted(sets, key=len):
        if not any(smaller <= candidate for smaller in kept):
            kept.append(candidate)
    return set(kept)


def stanley_reisner_ideal(complex: SimplicialComplex) -> SRIdeal:
    return MonomialIdeal(
        (Monomial.from_vars(*sorted(s)) for s in minimal_nonfaces(complex)),
        complex.vertex_set,
    )


def quotient_hilbert(complex: SimplicialComplex, d: int) -> int:
    """Degree-d Hilbert function of the Stanley-Reisner ring k[Δ]."""
    return hilbert_from_f_vector(f_vector(complex).f, d)


def brute_force_quotient_hilbert(complex: SimplicialComplex, d: int) -> int:
    return brute_force_face_support_count(
        sorted(complex.vertex_set), complex.is_face, d
    )


class SimplicialFiltration:
    """An increasing sequence of complexes Δ_0 ⊆ Δ_1 ⊆ … ⊆ Δ_k."""

    def __init__(self, complexes: Sequence[SimplicialComplex]) -> None:
        if not complexes:
            raise InputError("simplicial filtration has no levels")
        for n, (earlier, later) in enumerate(zip(complexes, complexes[1:])):
            if not earlier.is_subcomplex_of(later):
                raise InputError(f"complex at level {n} is not contained in level {n + 1}")
        self._complexes: Tuple[SimplicialComplex, ...] = tuple(complexes)

    @property
    def k(self) -> int:
        return len(self._complexes) - 1

    @property
    def complexes(self) -> Tuple[SimplicialComplex, ...]:
        return self._complexes

    def __getitem__(self, n: int) -> SimplicialComplex:
        if n < 0:
            raise InputError(f"level {n} is negative")
        return self._complexes[min(n, self.k)]

    def sr_ideal(self, n: int) -> SRIdeal:
        return stanley_reisner_ideal(self[n])


def clique_filtration(filtration: Filtration) -> SimplicialFiltration:
    return SimplicialFiltration(
        [clique_complex(underlying_undirected(filtration, n)) for n in range(filtration.k + 1)]
    )


def sr_hilbert_cell(complex: SimplicialComplex, d: int) -> int:
    return monomial_count(len(complex.vertex_set), d) - quotient_hilbert(complex, d)


def simplicial_hilbert_table(
    sfiltration: SimplicialFiltration, d_max: int, oracle: bool = False
) -> GradedDimTable:
    if d_max < 0:
        raise InputError(f"d_max must be nonnegative, got {d_max}")
    rows: List[Tuple[int, ...]] = []
    for n, complex in enumerate(sfiltration.complexes):
        row = tuple(sr_hilbert_cell(complex, d) for d in range(d_max + 1))
        if oracle:
            ideal = stanley_reisner_ideal(complex)
            expected = tuple(graded_dim(ideal, d) for d in range(d_max + 1))
            if row != expected:
                raise InvariantViolation(
                    f"SR Hilbert row {n} is {row} but the SR ideal gives {expected}"
                )
        rows.append(row)
    logger.debug("SR Hilbert table with %d rows", len(rows))
    return GradedDimTable("sr", tuple(rows))


def sr_hilbert_table(filtration: Filtration, d_max: int) -> GradedDimTable:
    return simplicial_hilbert_table(clique_filtration(filtration), d_max, oracle=True)


def check_bigraded_closure(
    sfiltration: SimplicialFiltration, pairs: Optional[Iterable[Tuple[int, int]]] = None
) -> bool:
    """Generator products of I_{Δ_n} and I_{Δ_m} lie in I_{Δ_max(n,m)}."""
    ideals = [sfiltration.sr_ideal(n) for n in range(sfiltration.k + 1)]
    levels = range(sfiltration.k + 1)
    if pairs is None:
        pairs = [(n, m) for n in levels for m in levels]
    for n, m in pairs:
        target = ideals[min(max(n, m), sfiltration.k)]
        for f in ideals[min(n, sfiltration.k)].generators:
            for g in ideals[min(m, sfiltration.k)].generators:
                if not target.contains(f * g):
                    logger.warning("bigraded closure fails for %s * %s", f, g)
                    return False
    return True
