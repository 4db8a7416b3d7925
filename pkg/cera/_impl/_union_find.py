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

from typing import Dict, Iterable, Iterator

from cera._impl._helper import VertexId


class UnionFind:
    """Disjoint sets over sparse vertex ids with union by rank and path compression."""

    def __init__(self, vertices: Iterable[VertexId] = ()) -> None:
        self._parent: Dict[VertexId, VertexId] = {}
        self._rank: Dict[VertexId, int] = {}
        self._count = 0
        for vertex in vertices:
            self.add(vertex)

    def add(self, x: VertexId) -> None:
        if x in self._parent:
            return
        self._parent[x] = x
        self._rank[x] = 0
        self._count += 1

    def find(self, x: VertexId) -> VertexId:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x: VertexId, y: VertexId) -> bool:
        """Merges the sets of x and y. Returns False if they were already one set."""
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self._rank[x_root] < self._rank[y_root]:
            self._parent[x_root] = y_root
        elif self._rank[x_root] > self._rank[y_root]:
            self._parent[y_root] = x_root
        else:
            self._parent[y_root] = x_root
            self._rank[x_root] += 1
        self._count -= 1
        return True

    def is_same(self, x: VertexId, y: VertexId) -> bool:
        return self.find(x) == self.find(y)

    @property
    def count(self) -> int:
        return self._count

    def copy(self) -> "UnionFind":
        uf = UnionFind()
        uf._parent = self._parent.copy()
        uf._rank = self._rank.copy()
        uf._count = self._count
        return uf

    def __contains__(self, x: object) -> bool:
        return x in self._parent

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._parent)

    def __len__(self) -> int:
        return len(self._parent)

    def __repr__(self) -> str:
        return f"UnionFind(vertices={len(self._parent)}, sets={self._count})"
