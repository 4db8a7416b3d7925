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

from cera.sync_api import (
    BridgePolynomial,
    Filtration,
    InputError,
    Monomial,
    beta0,
    bridge_polynomial,
    classify_level_edges,
    from_edge_levels,
    quotient_new_generators,
    verify_bridge_theorem,
)


def test_beta0_examples(example_i: Filtration, example_iii: Filtration) -> None:
    assert [beta0(example_i, n) for n in (1, 2)] == [2, 1]
    assert beta0(example_iii, 1) == 3
    assert beta0(example_iii, 2) == 1
    assert beta0(example_i, 0) == 4
    assert beta0(example_i.with_vertex_mode("incident"), 0) == 0
    with pytest.raises(InputError):
        beta0(example_i, 3)


def test_example_i_bridge(example_i: Filtration) -> None:
    level = classify_level_edges(example_i, 2)
    assert level.classified == {(2, 3): "bridge"}
    assert level.dim_b == 1
    assert level.bridges == [(2, 3)]
    assert level.bridge_monomials == [Monomial.from_vars(2, 3)]


def test_example_ii_cycle(example_ii: Filtration) -> None:
    level = classify_level_edges(example_ii, 2)
    assert level.classified == {(4, 1): "cycle"}
    assert (level.dim_b, level.dim_c, level.dim_r) == (0, 1, 0)
    assert level.beta0_before == level.beta0_after == 1


def test_example_iii_two_bridges(example_iii: Filtration) -> None:
    level = classify_level_edges(example_iii, 2)
    assert level.classified == {(2, 3): "bridge", (4, 5): "bridge"}
    assert level.dim_b == 2
    assert (level.beta0_before, level.beta0_after) == (3, 1)


def test_redundant_edges_count_once() -> None:
    filtration = from_edge_levels(
        [(1, 2, 1), (3, 4, 1), (1, 3, 2), (2, 4, 2)], vertices=[1, 2, 3, 4]
    )
    level = classify_level_edges(filtration, 2)
    assert level.classified == {(1, 3): "bridge", (2, 4): "cycle"}
    reordered = classify_level_edges(
        from_edge_levels([(1, 2, 1), (3, 4, 1), (2, 4, 2), (1, 3, 2)]), 2, "input-order"
    )
    assert reordered.classified == {(2, 4): "bridge", (1, 3): "cycle"}
    assert reordered.dim_b == level.dim_b


def test_incident_mode_classes(example_i: Filtration) -> None:
    incident = example_i.with_vertex_mode("incident")
    level1 = classify_level_edges(incident, 1)
    assert level1.classified == {(1, 2): "creation", (3, 4): "creation"}
    assert (level1.dim_b, level1.dim_r, level1.creations) == (0, 2, 2)
    expansion = classify_level_edges(from_edge_levels([(1, 2, 1), (2, 3, 2)], vertex_mode="incident"), 2)
    assert expansion.classified == {(2, 3): "expansion"}


def test_classify_validates_arguments(example_i: Filtration) -> None:
    with pytest.raises(InputError):
        classify_level_edges(example_i, 0)
    with pytest.raises(InputError):
        classify_level_edges(example_i, 1, "random")  # type: ignore


def test_bridge_polynomials(example_i: Filtration, example_ii: Filtration) -> None:
    full = bridge_polynomial(example_i)
    assert full.coefficients == (2, 1)
    assert str(full) == "2t + t^2"
    assert full.evaluate(1) == 3
    assert full.evaluate(2) == 8
    assert bridge_polynomial(example_i.with_vertex_mode("incident")).coefficients == (0, 1)
    assert bridge_polynomial(example_ii).coefficients == (3, 0)
    assert str(BridgePolynomial(())) == "0"
    assert str(BridgePolynomial((0, 0, 3))) == "3t^3"


def test_bridge_polynomial_bounded_by_rank(example_iii: Filtration) -> None:
    total = bridge_polynomial(example_iii).total
    assert total <= len(example_iii.vertices) - beta0(example_iii, example_iii.k)


def test_bridge_theorem_full_mode(example_i: Filtration, example_ii: Filtration) -> None:
    checks = verify_bridge_theorem(example_i)
    assert [(c.dim_b, c.beta0_drop, c.holds) for c in checks] == [(2, 2, True), (1, 1, True)]
    level2 = verify_bridge_theorem(example_ii)[1]
    assert (level2.dim_b, level2.beta0_drop, level2.holds) == (0, 0, True)


def test_bridge_theorem_incident_mode(example_i: Filtration) -> None:
    checks = verify_bridge_theorem(example_i.with_vertex_mode("incident"))
    level1 = checks[0]
    assert (level1.dim_b, level1.beta0_drop, level1.holds, level1.discrepancy) == (0, -2, False, 2)
    assert checks[1].holds


def test_lattice_bridge_at_third_level(lattice: Filtration) -> None:
    incident = lattice.with_vertex_mode("incident")
    assert [beta0(incident, n) for n in range(1, 5)] == [1, 2, 1, 1]
    level3 = classify_level_edges(incident, 3)
    assert level3.classified == {(22, 23): "bridge"}
    assert (level3.beta0_before, level3.beta0_after) == (2, 1)
    assert [beta0(lattice, n) for n in range(5)] == [9, 6, 4, 3, 3]
    assert bridge_polynomial(lattice).coefficients == (3, 2, 1, 0)


def test_bridges_are_new_generators(example_iii: Filtration) -> None:
    level = classify_level_edges(example_iii, 2)
    assert set(level.bridge_monomials) <= quotient_new_generators(example_iii, 2)
    assert level.dim_b + level.dim_c + level.dim_r == 2
