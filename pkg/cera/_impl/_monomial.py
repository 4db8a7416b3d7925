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

from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from cera._impl._api_types import InputError
from cera._impl._helper import VertexId


class Monomial:
    """A monomial over vertex variables, stored as a sparse exponent map."""

    __slots__ = ("_exponents", "_hash")

    def __init__(self, exponents: Mapping[VertexId, int] = None) -> None:
        items = []
        for var, exponent in (exponents or {}).items():
            if exponent < 0:
                raise InputError(f"negative exponent {exponent} on x{var}")
            if exponent:
                items.append((var, exponent))
        self._exponents: Tuple[Tuple[VertexId, int], ...] = tuple(sorted(items))
        self._hash = hash(self._exponents)

    @classmethod
    def from_vars(cls, *variables: VertexId) -> "Monomial":
        """x_{v1} * x_{v2} * …, repeated variables raise the exponent."""
        exponents: Dict[VertexId, int] = {}
        for var in variables:
            exponents[var] = exponents.get(var, 0) + 1
        return cls(exponents)

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @property
    def exponents(self) -> Dict[VertexId, int]:
        return dict(self._exponents)

    def exponent(self, var: VertexId) -> int:
        for v, e in self._exponents:
            if v == var:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exponents)

    @property
    def support(self) -> FrozenSet[VertexId]:
        return frozenset(v for v, _ in self._exponents)

    @property
    def is_one(self) -> bool:
        return not self._exponents

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(other.exponent(v) >= e for v, e in self._exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exponents = dict(self._exponents)
        for v, e in other._exponents:
            exponents[v] = exponents.get(v, 0) + e
        return Monomial(exponents)

    def rename(self, mapping: Mapping[VertexId, VertexId]) -> "Monomial":
        """Substitutes x_v -> x_{mapping[v]}; merged variables add exponents."""
        exponents: Dict[VertexId, int] = {}
        for v, e in self._exponents:
            image = mapping[v]
            exponents[image] = exponents.get(image, 0) + e
        return Monomial(exponents)

    def sort_key(self) -> Tuple[int, Tuple[Tuple[VertexId, int], ...]]:
        return (self.degree, self._exponents)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exponents:
            return "1"
        return "*".join(
            f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self._exponents
        )

    def __repr__(self) -> str:
        return f"Monomial({self})"


class MonomialIdeal:
    """A monomial ideal given by generators inside k[x_v : v in ambient_vars]."""

    def __init__(
        self, generators: Iterable[Monomial], ambient_vars: Iterable[VertexId]
    ) -> None:
        self._generators = frozenset(generators)
        self._ambient_vars: Tuple[VertexId, ...] = tuple(sorted(set(ambient_vars)))
        ambient = set(self._ambient_vars)
        for generator in self._generators:
            outside = generator.support - ambient
            if outside:
                raise InputError(
                    f"generator {generator} uses variables {sorted(outside)} outside the ring"
                )

    @property
    def generators(self) -> FrozenSet[Monomial]:
        return self._generators

    @property
    def ambient_vars(self) -> Tuple[VertexId, ...]:
        return self._ambient_vars

    @property
    def is_zero(self) -> bool:
        return not self._generators

    @property
    def is_unit(self) -> bool:
        return any(g.is_one for g in self._generators)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.minimal_generators())

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self._generators)

    def __contains__(self, m: object) -> bool:
        return isinstance(m, Monomial) and self.contains(m)

    def minimal_generators(self) -> FrozenSet[Monomial]:
        minimal = []
        # Ascending degree: a divisor is always kept before its multiples.
        for m in sorted(self._generators):
            if not any(g.divides(m) for g in minimal):
                minimal.append(m)
        return frozenset(minimal)

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self._generators)

    def same_ideal(self, other: "MonomialIdeal") -> bool:
        return self.minimal_generators() == other.minimal_generators()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (
            self._ambient_vars == other._ambient_vars
            and self.minimal_generators() == other.minimal_generators()
        )

    def __hash__(self) -> int:
        return hash((self._ambient_vars, self.minimal_generators()))

    def __str__(self) -> str:
        if not self._generators:
            return "(0)"
        return "<" + ", ".join(str(g) for g in sorted(self.minimal_generators())) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self}, vars={len(self._ambient_vars)})"


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def minimal_generators(ideal: MonomialIdeal) -> FrozenSet[Monomial]:
    return ideal.minimal_generators()
