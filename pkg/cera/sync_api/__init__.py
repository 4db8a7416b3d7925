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

"""
Blocking API of `cera`: causal graphs, temporal filtrations, connectivity and
bridge modules, edge ideals and their Rees generator tables, clique complexes
with Stanley-Reisner ideals, filtered morphisms, file formats and reports.
"""

import cera._impl._api_structures
import cera._impl._api_types
from cera._impl._cera import (
    CeraGeneratorRow,
    CeraGeneratorTable,
    associated_graded_table,
    cera_table,
    check_multiplicative_closure,
    edge_ideal,
    hilbert_table,
    quotient_new_generators,
)
from cera._impl._connectivity import (
    BridgePolynomial,
    BridgeTheoremCheck,
    LevelClassification,
    beta0,
    bridge_polynomial,
    classify_filtration,
    classify_level_edges,
    component_state,
    verify_bridge_theorem,
)
from cera._impl._filtration import (
    Filtration,
    LevelGraph,
    TimeGrid,
    aggregate_filtration,
    auto_grid,
    build_filtration,
    from_edge_levels,
    level_diff,
    underlying_undirected,
)
from cera._impl._functorial import (
    FilteredMorphism,
    check_morphism,
    compose,
    identity_morphism,
    induced_image_check,
    induced_monomial,
    temporal_collapse,
    verify_naturality,
)
from cera._impl._graph import (
    AdmissibilityParams,
    CausalGraph,
    Event,
    admissible,
    build_causal_graph,
    lattice_events,
    metric_distance,
    validate_causal,
)
from cera._impl._hilbert import (
    GradedDimTable,
    brute_force_graded_dim,
    graded_dim,
    hilbert_from_f_vector,
    monomial_count,
)
from cera._impl._io import (
    load_filtration,
    parse_complex_levels,
    parse_edge_levels,
    parse_events,
    parse_morphism,
    write_filtration,
)
from cera._impl._monomial import Monomial, MonomialIdeal, contains, minimal_generators
from cera._impl._oracle import bfs_beta0, run_oracle
from cera._impl._report import AnalysisConfig, AnalysisReport, Analyzer, emit, run_analyze
from cera._impl._simplicial import (
    FVector,
    SimplicialComplex,
    SimplicialFiltration,
    SRIdeal,
    brute_force_quotient_hilbert,
    check_bigraded_closure,
    clique_complex,
    clique_filtration,
    f_vector,
    minimal_nonfaces,
    quotient_hilbert,
    simplicial_hilbert_table,
    sr_hilbert_cell,
    sr_hilbert_table,
    stanley_reisner_ideal,
)
from cera._impl._union_find import UnionFind

ConfigEcho = cera._impl._api_structures.ConfigEcho
HilbertRecord = cera._impl._api_structures.HilbertRecord
LevelRecord = cera._impl._api_structures.LevelRecord
OracleCheck = cera._impl._api_structures.OracleCheck

Error = cera._impl._api_types.Error
InputError = cera._impl._api_types.InputError
InvariantViolation = cera._impl._api_types.InvariantViolation
StructuralError = cera._impl._api_types.StructuralError
VertexCollapseWarning = cera._impl._api_types.VertexCollapseWarning

__all__ = [
    "AdmissibilityParams",
    "AnalysisConfig",
    "AnalysisReport",
    "Analyzer",
    "BridgePolynomial",
    "BridgeTheoremCheck",
    "CausalGraph",
    "CeraGeneratorRow",
    "CeraGeneratorTable",
    "ConfigEcho",
    "Error",
    "Event",
    "FilteredMorphism",
    "Filtration",
    "FVector",
    "GradedDimTable",
    "HilbertRecord",
    "InputError",
    "InvariantViolation",
    "LevelClassification",
    "LevelGraph",
    "LevelRecord",
    "Monomial",
    "MonomialIdeal",
    "OracleCheck",
    "SimplicialComplex",
    "SimplicialFiltration",
    "SRIdeal",
    "StructuralError",
    "TimeGrid",
    "UnionFind",
    "VertexCollapseWarning",
    "admissible",
    "aggregate_filtration",
    "associated_graded_table",
    "auto_grid",
    "beta0",
    "bfs_beta0",
    "bridge_polynomial",
    "brute_force_graded_dim",
    "brute_force_quotient_hilbert",
    "build_causal_graph",
    "build_filtration",
    "cera_table",
    "check_bigraded_closure",
    "check_morphism",
    "check_multiplicative_closure",
    "classify_filtration",
    "classify_level_edges",
    "clique_complex",
    "clique_filtration",
    "component_state",
    "compose",
    "contains",
    "edge_ideal",
    "emit",
    "f_vector",
    "from_edge_levels",
    "graded_dim",
    "hilbert_from_f_vector",
    "hilbert_table",
    "identity_morphism",
    "induced_image_check",
    "induced_monomial",
    "lattice_events",
    "level_diff",
    "load_filtration",
    "metric_distance",
    "minimal_generators",
    "minimal_nonfaces",
    "monomial_count",
    "parse_complex_levels",
    "parse_edge_levels",
    "parse_events",
    "parse_morphism",
    "quotient_hilbert",
    "quotient_new_generators",
    "run_analyze",
    "run_oracle",
    "simplicial_hilbert_table",
    "sr_hilbert_cell",
    "sr_hilbert_table",
    "stanley_reisner_ideal",
    "temporal_collapse",
    "underlying_undirected",
    "validate_causal",
    "verify_bridge_theorem",
    "verify_naturality",
    "write_filtration",
]
