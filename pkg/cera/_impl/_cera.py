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
from typing import Iterable, List, Literal, Optional, Set, Tuple

from cera._impl._api_types import InputError, InvariantViolation
from cera._impl._filtration import Filtration, level_diff
from cera._impl._helper import undirected
from cera._impl._hilbert import GradedDimTable, brute_force_graded_dim, graded_dim
from cera._impl._monomial import Monomial, MonomialIdeal

logger = logging.getLogger(__name__)

GeneratorStatus = Literal["new", "inherited"]

# (monomial, level) pairs drawn from the Rees pieces I_n T^n.
Sample = Tuple[Monomial, int]


def edge_ideal(filtration: Filtration, n: int) -> MonomialIdeal:
    """I_n = <x_u x_v : {u, v} in G_n*> inside k[x_v : v in V]."""
    if n < 0:
        raise InputError(f"level {n} is negative")
    pairs = {undirected(e) for e in filtration.edges(n)}
    return MonomialIdeal(
        (Monomial.from_vars(u, v) for u, v in pairs), filtration.vertices
    )


def quotient_new_generators(filtration: Filtration, n: int) -> Set[Monomial]:
    """Generators of I_n / I_{n-1}. Empty past stabilization."""
    if n < 1:
        raise InputError(f"level {n} is outside 1..{filtration.k}")
    if n > filtration.k:
        return set()
    previous = edge_ideal(filtration, n - 1)
    result = {Monomial.from_vars(*undirected(e)) for e in level_diff(filtration, n)}
    for m in result:
        if previous.contains(m):
            raise InvariantViolation(f"new generator {m} at level {n} already lies in I_{n - 1}")
    return result


@dataclass(frozen=True)
class CeraGeneratorRow:
    level: int
    monomial: Monomial
    status: GeneratorStatus


@dataclass(frozen=True)
class CeraGeneratorTable:
    rows: Tuple[CeraGeneratorRow, ...]

    def at_level(self, n: int, status: Optional[GeneratorStatus] = None) -> Set[Monomial]:
        return {
            r.monomial
            for r in self.rows
            if r.level == n and (status is None or r.status == status)
        }

    def new(self, n: int) -> Set[Monomial]:
        return self.at_level(n, "new")

    def inherited(self, n: int) -> Set[Monomial]:
        return self.at_level(n, "inherited")


def cera_table(filtration: Filtration) -> CeraGeneratorTable:
    rows: List[CeraGeneratorRow] = []
    for n in range(1, filtration.k + 1):
        inherited = edge_ideal(filtration, n - 1).minimal_generators()
        new = quotient_new_generators(filtration, n)
        rows.extend(CeraGeneratorRow(n, m, "inherited") for m in sorted(inherited))
        rows.extend(CeraGeneratorRow(n, m, "new") for m in sorted(new))
        if set(inherited) | new != set(edge_ideal(filtration, n).minimal_generators()):
            raise InvariantViolation(f"level {n}: generator rows do not span I_{n}")
    return CeraGeneratorTable(tuple(rows))


def hilbert_table(filtration: Filtration, d_max: int, oracle: bool = False) -> GradedDimTable:
    if d_max < 0:
        raise InputError(f"d_max must be nonnegative, got {d_max}")
    rows = []
    for n in range(filtration.k + 1):
        ideal = edge_ideal(filtration, n)
        row = tuple(graded_dim(ideal, d) for d in range(d_max + 1))
        if oracle:
            expected = tuple(brute_force_graded_dim(ideal, d) for d in range(d_max + 1))
            if row != expected:
                raise InvariantViolation(
                    f"edge Hilbert row {n} is {row}, enumeration gives {expected}"
                )
        rows.append(row)
    return GradedDimTable("edge", tuple(rows))


def associated_graded_table(filtration: Filtration, d_max: int) -> GradedDimTable:
    """Dimensions of I_n / I_{n-1} in each degree, for n = 1..k."""
    differences = hilbert_table(filtration, d_max).differences()
    return GradedDimTable("edge", differences.cells[1:])


def generator_samples(filtration: Filtration) -> List[Sample]:
    """Every generator at the level it first appears, plus the unit at level 0."""
    samples: List[Sample] = [(Monomial.one(), 0)]
    for n in range(1, filtration.k + 1):
        samples.extend((m, n) for m in sorted(quotient_new_generators(filtration, n)))
    return samples


def check_multiplicative_closure(
    filtration: Filtration, samples: Optional[Iterable[Tuple[Sample, Sample]]] = None
) -> bool:
    """(I_a T^a)(I_b T^b) ⊆ I_{a+b} T^{a+b} on sampled generator pairs."""
    if samples is None:
        pool = generator_samples(filtration)
        samples = [(p, q) for p in pool for q in pool]
    ideals = [edge_ideal(filtration, n) for n in range(filtration.k + 1)]
    for (f, a), (g, b) in samples:
        # The degree-0 piece of the Rees algebra is all of R, not I_0.
        if a == 0 and f.is_one:
            level = b
        elif b == 0 and g.is_one:
            level = a
        else:
            level = a + b
        if level == 0:
            continue
        product = f * g
        if not ideals[min(level, filtration.k)].contains(product):
            logger.warning("%s * %s escapes level %d", f, g, level)
            return False
    return True
