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

import pytest

from cera.sync_api import InputError, Monomial, MonomialIdeal, contains, minimal_generators

x = Monomial.from_vars


def test_monomial_basics() -> None:
    m = x(1, 2, 2)
    assert m.degree == 3
    assert m.exponent(2) == 2
    assert m.support == {1, 2}
    assert not m.is_squarefree
    assert str(m) == "x1*x2^2"
    assert str(Monomial.one()) == "1"
    assert Monomial.one().is_one
    assert x(2, 1) == x(1, 2)
    assert hash(x(2, 1)) == hash(x(1, 2))


def test_monomial_arithmetic() -> None:
    assert x(1, 2) * x(2, 3) == x(1, 2, 2, 3)
    assert x(1, 2).divides(x(1, 2, 3))
    assert not x(1, 1).divides(x(1, 2))
    assert Monomial.one().divides(x(5))
    assert x(1, 2).rename({1: 7, 2: 7}) == Monomial({7: 2})
    with pytest.raises(InputError):
        Monomial({1: -1})


def test_contains() -> None:
    assert contains(MonomialIdeal([x(1, 2)], [1, 2, 3]), x(1, 2, 3))
    i1 = MonomialIdeal([x(1, 2), x(3, 4)], [1, 2, 3, 4])
    assert not contains(i1, x(2, 3))
    assert not contains(i1, Monomial.one())
    assert x(3, 4, 4) in i1


def test_minimal_generators() -> None:
    ideal = MonomialIdeal([x(1, 2), x(1, 2, 3)], [1, 2, 3])
    assert minimal_generators(ideal) == {x(1, 2)}
    path = MonomialIdeal([x(1, 3), x(1, 4), x(2, 4)], [1, 2, 3, 4])
    assert minimal_generators(path) == path.generators
    edges = MonomialIdeal([x(1, 2), x(2, 3), x(3, 4), x(1, 4)], [1, 2, 3, 4])
    assert minimal_generators(edges) == edges.generators


def test_ideal_equality_uses_minimal_generators() -> None:
    a = MonomialIdeal([x(1, 2), x(1, 2, 3)], [1, 2, 3])
    b = MonomialIdeal([x(1, 2)], [1, 2, 3])
    assert a == b
    assert a.same_ideal(b)
    assert b.is_subideal_of(MonomialIdeal([x(1)], [1, 2, 3]))
    assert str(a) == "<x1*x2>"
    assert str(MonomialIdeal([], [1])) == "(0)"


def test_ideal_rejects_foreign_variables() -> None:
    with pytest.raises(InputError):
        MonomialIdeal([x(1, 9)], [1, 2])


def test_zero_and_unit_ideals() -> None:
    assert MonomialIdeal([], [1, 2]).is_zero
    assert MonomialIdeal([Monomial.one()], [1, 2]).is_unit
