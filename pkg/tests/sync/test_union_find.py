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

from cera.sync_api import UnionFind


def test_union_and_count() -> None:
    uf = UnionFind([1, 2, 3, 4])
    assert uf.count == 4
    assert uf.union(1, 2)
    assert uf.union(3, 4)
    assert not uf.union(2, 1)
    assert uf.count == 2
    assert uf.union(2, 3)
    assert uf.is_same(1, 4)
    assert uf.count == 1


def test_add_is_idempotent_and_sparse() -> None:
    uf = UnionFind()
    uf.add(1000)
    uf.add(1000)
    uf.add(7)
    assert len(uf) == 2
    assert 1000 in uf and 8 not in uf
    assert sorted(uf) == [7, 1000]


def test_copy_is_independent() -> None:
    uf = UnionFind([1, 2, 3])
    clone = uf.copy()
    clone.union(1, 2)
    assert uf.count == 3
    assert clone.count == 2
    assert not uf.is_same(1, 2)


def test_long_chain_compresses() -> None:
    uf = UnionFind(range(1000))
    for v in range(999):
        uf.union(v, v + 1)
    assert uf.count == 1
    root = uf.find(0)
    assert all(uf.find(v) == root for v in range(1000))
