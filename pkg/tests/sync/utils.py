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

import random
from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from cera.sync_api import (
    Filtration,
    Monomial,
    MonomialIdeal,
    SimplicialComplex,
    from_edge_levels,
)

Edge = Tuple[int, int]


class Utils:
    def random_filtration(
        self,
        rng: random.Random,
        max_vertices: int = 10,
        max_levels: int = 6,
        vertex_mode: str = "full",
    ) -> Filtration:
        vertices = list(range(1, rng.randint(2, max_vertices) + 1))
        levels = rng.randint(1, max_levels)
        density = rng.random()
        rows = []
        for u, v in combinations(vertices, 2):
            if rng.random() < density:
                if rng.random() < 0.5:
                    u, v = v, u
                rows.append((u, v, rng.randint(1, levels)))
        rng.shuffle(rows)
        return from_edge_levels(rows, levels, vertices, vertex_mode)  # type: ignore

    def random_graph(
        self, rng: random.Random, max_vertices: int = 12
    ) -> Tuple[List[int], Set[Edge]]:
        vertices = list(range(rng.randint(1, max_vertices)))
        density = rng.random()
        edges = {(u, v) for u, v in combinations(vertices, 2) if rng.random() < density}
        return vertices, edges

    def random_morphism(
        self, rng: random.Random, source: Filtration
    ) -> Tuple[Filtration, Dict[int, int]]:
        """An injective vertex map and a target that contains every image edge in time."""
        universe = list(range(100, 100 + len(source.vertices) + rng.randint(0, 3)))
        rng.shuffle(universe)
        vertex_map = dict(zip(sorted(source.vertices), universe))
        levels = source.k + rng.randint(0, 2)
        arrivals: Dict[Edge, int] = {}
        for (u, v), level in source.arrivals.items():
            arrivals[(vertex_map[u], vertex_map[v])] = rng.randint(1, level)
        taken = {frozenset(e) for e in arrivals}
        for u, v in combinations(universe, 2):
            if frozenset((u, v)) not in taken and rng.random() < 0.2:
                arrivals[(u, v)] = rng.randint(1, levels)
        rows = [(u, v, level) for (u, v), level in arrivals.items()]
        return from_edge_levels(rows, levels, universe), vertex_map

    def random_squarefree_ideal(self, rng: random.Random, num_vars: int) -> MonomialIdeal:
        variables = list(range(1, num_vars + 1))
        generators = []
        for _ in range(rng.randint(0, 5)):
            size = rng.randint(1, min(3, num_vars))
            generators.append(Monomial.from_vars(*rng.sample(variables, size)))
        return MonomialIdeal(generators, variables)

    def random_monomial_ideal(self, rng: random.Random, num_vars: int) -> MonomialIdeal:
        variables = list(range(1, num_vars + 1))
        generators = []
        for _ in range(rng.randint(1, 4)):
            chosen = rng.sample(variables, rng.randint(1, min(2, num_vars)))
            exponents = {v: rng.randint(0, 2) for v in chosen}
            if any(exponents.values()):
                generators.append(Monomial(exponents))
        return MonomialIdeal(generators, variables)

    def random_complex(self, rng: random.Random, num_vars: int) -> SimplicialComplex:
        variables = list(range(1, num_vars + 1))
        facets = [
            rng.sample(variables, rng.randint(1, min(4, num_vars)))
            for _ in range(rng.randint(0, 4))
        ]
        return SimplicialComplex(variables, facets)

    def bfs_components(self, vertices: Iterable[int], edges: Iterable[Edge]) -> int:
        neighbours: Dict[int, Set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        seen: Set[int] = set()
        components = 0
        for start in neighbours:
            if start in seen:
                continue
            components += 1
            queue = deque([start])
            seen.add(start)
            while queue:
                for w in neighbours[queue.popleft()]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return components

    def level_beta0(self, filtration: Filtration, n: int) -> int:
        edges = filtration.edges(n)
        if filtration.vertex_mode == "full":
            vertices: Iterable[int] = filtration.vertices
        else:
            vertices = {v for e in edges for v in e}
        return self.bfs_components(vertices, edges)

    def faces(self, complex: SimplicialComplex) -> Set[FrozenSet[int]]:
        return set(complex.faces())


utils = Utils()
