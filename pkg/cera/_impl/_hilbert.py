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

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from cera._impl._api_types import InputError
from cera._impl._helper import HilbertKind, VertexId
from cera._impl._monomial import Monomial, MonomialIdeal


def monomial_count(num_vars: int, d: int) -> int:
    """Number of degree-d monomials in num_vars variables, C(N+d-1, d)."""
    if d < 0:
        raise InputError(f"degree {d} is negative")
    if d == 0:
        return 1
    return comb(num_vars + d - 1, d)


def hilbert_from_f_vector(f: Sequence[int], d: int) -> int:
    """Hilbert function of a Stanley-Reisner ring from f = (f_-1, f_0, …).

    f[i] counts faces of cardinality i. The empty face only contributes in
    degree 0.
    """
    if d < 0:
        raise InputError(f"degree {d} is negative")
    if d == 0:
        return 1 if f and f[0] else 0
    return sum(f[i] * comb(d - 1, i - 1) for i in range(1, len(f)))


def face_counts(
    vertices: Iterable[VertexId], nonfaces: Iterable[FrozenSet[VertexId]]
) -> List[int]:
    """Counts subsets of vertices containing no nonface, by cardinality."""
    ordered = sorted(set(vertices))
    blockers: Dict[VertexId, List[FrozenSet[VertexId]]] = {}
    void = False
    for nonface in nonfaces:
        if not nonface:
            void = True
            continue
        blockers.setdefault(max(nonface), []).append(frozenset(nonface))
    if void:
        return [0]
    counts = [1]
    stack: List[Tuple[FrozenSet[VertexId], int]] = [(frozenset(), 0)]
    while stack:
        face, start = stack.pop()
        for index in range(start, len(ordered)):
            v = ordered[index]
            candidate = face | {v}
            # Only nonfaces whose largest vertex is v can appear for the first time.
            if any(b <= candidate for b in blockers.get(v, ())):
                continue
            size = len(candidate)
            if size == len(counts):
                counts.append(0)
            counts[size] += 1
            stack.append((candidate, index + 1))
    return counts


def graded_dim(ideal: MonomialIdeal, d: int) -> int:
    """dim_k of the degree-d piece of a monomial ideal."""
    if d < 0:
        raise InputError(f"degree {d} is negative")
    num_vars = len(ideal.ambient_vars)
    if ideal.is_zero:
        return 0
    if ideal.is_unit:
        return monomial_count(num_vars, d)
    minimal = ideal.minimal_generators()
    if all(m.is_squarefree for m in minimal):
        f = face_counts(ideal.ambient_vars, (m.support for m in minimal))
        return monomial_count(num_vars, d) - hilbert_from_f_vector(f, d)
    return brute_force_graded_dim(ideal, d)


def _monomials_of_degree(variables: Sequence[VertexId], d: int) -> Iterable[Monomial]:
    for combo in combinations_with_replacement(variables, d):
        yield Monomial.from_vars(*combo)


def brute_force_graded_dim(ideal: MonomialIdeal, d: int) -> int:
    if d < 0:
        raise InputError(f"degree {d} is negative")
    return sum(1 for m in _monomials_of_degree(ideal.ambient_vars, d) if ideal.contains(m))


def brute_force_face_support_count(
    variables: Sequence[VertexId],
    is_face: Callable[[FrozenSet[VertexId]], bool],
    d: int,
) -> int:
    """Degree-d monomials whose support is a face."""
    if d < 0:
        raise InputError(f"degree {d} is negative")
    return sum(1 for m in _monomials_of_degree(variables, d) if is_face(m.support))


@dataclass(frozen=True)
class GradedDimTable:
    """H(n, d) for 0 <= n <= k and 0 <= d <= d_max. Rows repeat for n >= k."""

    kind: HilbertKind
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        if not cells or len({len(row) for row in cells}) != 1 or not cells[0]:
            raise InputError("graded dimension table must be a nonempty rectangle")
        object.__setattr__(self, "cells", cells)

    @property
    def k(self) -> int:
        return len(self.cells) - 1

    @property
    def d_max(self) -> int:
        return len(self.cells[0]) - 1

    def row(self, n: int) -> Tuple[int, ...]:
        if n < 0:
            raise InputError(f"level {n} is negative")
        return self.cells[min(n, self.k)]

    def column(self, d: int) -> Tuple[int, ...]:
        return tuple(row[d] for row in self.cells)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        n, d = index
        if not 0 <= d <= self.d_max:
            raise InputError(f"degree {d} is outside 0..{self.d_max}")
        return self.row(n)[d]

    def differences(self) -> "GradedDimTable":
        """Entry (n, d) becomes H(n, d) - H(n-1, d), with row 0 kept as H(0, d)."""
        rows = [self.cells[0]] + [
            tuple(a - b for a, b in zip(current, previous))
            for previous, current in zip(self.cells, self.cells[1:])
        ]
        return GradedDimTable(self.kind, tuple(rows))
