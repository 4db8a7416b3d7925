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
import warnings
from types import MappingProxyType
from typing import List, Mapping, Set, Tuple

from cera._impl._api_types import InputError, InvariantViolation, StructuralError, VertexCollapseWarning
from cera._impl._cera import edge_ideal, quotient_new_generators
from cera._impl._filtration import Filtration, aggregate_filtration
from cera._impl._helper import Edge, VertexId
from cera._impl._monomial import Monomial, MonomialIdeal

logger = logging.getLogger(__name__)

Violation = Tuple[Edge, int]


class FilteredMorphism:
    """A vertex map between two filtered graphs.

    Construction only checks that every source vertex is mapped into the
    target universe. Whether edges and levels are preserved is reported by
    `check_morphism`.
    """

    def __init__(
        self,
        source: Filtration,
        target: Filtration,
        vertex_map: Mapping[VertexId, VertexId],
    ) -> None:
        for v in sorted(source.vertices):
            if v not in vertex_map:
                raise StructuralError(f"source vertex {v} is not mapped", v)
            if vertex_map[v] not in target.vertices:
                raise StructuralError(
                    f"vertex {v} maps to {vertex_map[v]}, which is not a target vertex", v
                )
        self._source = source
        self._target = target
        self._vertex_map: Mapping[VertexId, VertexId] = MappingProxyType(
            {v: vertex_map[v] for v in source.vertices}
        )

    @property
    def source(self) -> Filtration:
        return self._source

    @property
    def target(self) -> Filtration:
        return self._target

    @property
    def vertex_map(self) -> Mapping[VertexId, VertexId]:
        return self._vertex_map

    def __call__(self, vertex: VertexId) -> VertexId:
        return self._vertex_map[vertex]

    @property
    def is_injective(self) -> bool:
        return len(set(self._vertex_map.values())) == len(self._vertex_map)

    def violations(self) -> List[Violation]:
        found = []
        for n in range(1, self._source.k + 1):
            # Past its last level the target reads E'_k.
            target_edges = self._target.edges(n)
            for u, v in sorted(self._source.edges(n)):
                if (self(u), self(v)) not in target_edges:
                    found.append(((u, v), n))
        return found

    def __repr__(self) -> str:
        return f"<FilteredMorphism {self._source!r} -> {self._target!r}>"


def check_morphism(
    source: Filtration, target: Filtration, vertex_map: Mapping[VertexId, VertexId]
) -> List[Violation]:
    return FilteredMorphism(source, target, vertex_map).violations()


def identity_morphism(filtration: Filtration) -> FilteredMorphism:
    return FilteredMorphism(filtration, filtration, {v: v for v in filtration.vertices})


def compose(first: FilteredMorphism, second: FilteredMorphism) -> FilteredMorphism:
    """second ∘ first."""
    missing = set(first.vertex_map.values()) - set(second.vertex_map)
    if missing:
        raise InputError(
            f"cannot compose: intermediate vertices {sorted(missing)} are not mapped"
        )
    return FilteredMorphism(
        first.source,
        second.target,
        {v: second(w) for v, w in first.vertex_map.items()},
    )


def induced_monomial(morphism: FilteredMorphism, m: Monomial) -> Monomial:
    """x_v -> x_φ(v). Collapsing two variables of m raises a VertexCollapseWarning."""
    images = {morphism(v) for v in m.support}
    if len(images) < len(m.support):
        warnings.warn(
            f"{m} maps to a non-squarefree monomial: vertices merge under the morphism",
            VertexCollapseWarning,
            stacklevel=2,
        )
    return m.rename(morphism.vertex_map)


def induced_image_check(morphism: FilteredMorphism) -> bool:
    for n in range(1, morphism.source.k + 1):
        target_ideal = edge_ideal(morphism.target, n)
        for g in sorted(edge_ideal(morphism.source, n).generators):
            image = induced_monomial(morphism, g)
            if not target_ideal.contains(image):
                logger.info("image %s of %s is outside the target at level %d", image, g, n)
                return False
    return True


def temporal_collapse(filtration: Filtration) -> MonomialIdeal:
    """Edge ideal of the aggregated graph, the image of the Rees algebra at T = 1."""
    collapsed = edge_ideal(aggregate_filtration(filtration), 1)
    if collapsed != edge_ideal(filtration, filtration.k):
        raise InvariantViolation("collapse differs from the stabilized edge ideal")
    union: Set[Monomial] = set()
    for n in range(1, filtration.k + 1):
        union |= quotient_new_generators(filtration, n)
    if set(collapsed.minimal_generators()) != union:
        raise InvariantViolation("collapse differs from the union of level generators")
    return collapsed


def verify_naturality(morphism: FilteredMorphism) -> bool:
    """η_target ∘ F(φ) and U(φ) ∘ η_source agree on generators."""
    mapped_then_collapsed: Set[Monomial] = set()
    for n in range(1, morphism.source.k + 1):
        mapped_then_collapsed |= {
            induced_monomial(morphism, g) for g in edge_ideal(morphism.source, n).generators
        }
    collapsed_then_mapped = {
        induced_monomial(morphism, g)
        for g in temporal_collapse(morphism.source).generators
    }
    if mapped_then_collapsed != collapsed_then_mapped:
        return False
    target = temporal_collapse(morphism.target)
    return all(target.contains(m) for m in collapsed_then_mapped)
