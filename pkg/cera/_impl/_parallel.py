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

import asyncio
from concurrent.futures import Executor
from typing import Optional, Tuple

from cera._impl._api_types import InputError
from cera._impl._cera import edge_ideal
from cera._impl._filtration import Filtration, underlying_undirected
from cera._impl._helper import HilbertKind
from cera._impl._hilbert import GradedDimTable, graded_dim
from cera._impl._report import AnalysisConfig, AnalysisReport, run_analyze
from cera._impl._simplicial import clique_complex, sr_hilbert_cell


def _edge_row(filtration: Filtration, n: int, d_max: int) -> Tuple[int, ...]:
    ideal = edge_ideal(filtration, n)
    return tuple(graded_dim(ideal, d) for d in range(d_max + 1))


def _sr_row(filtration: Filtration, n: int, d_max: int) -> Tuple[int, ...]:
    complex = clique_complex(underlying_undirected(filtration, n))
    return tuple(sr_hilbert_cell(complex, d) for d in range(d_max + 1))


async def _gather_rows(
    kind: HilbertKind,
    filtration: Filtration,
    d_max: int,
    executor: Optional[Executor],
) -> GradedDimTable:
    """One executor job per level row."""
    if d_max < 0:
        raise InputError(f"d_max must be nonnegative, got {d_max}")
    row = _edge_row if kind == "edge" else _sr_row
    loop = asyncio.get_running_loop()
    rows = await asyncio.gather(
        *[
            loop.run_in_executor(executor, row, filtration, n, d_max)
            for n in range(filtration.k + 1)
        ]
    )
    return GradedDimTable(kind, tuple(rows))


async def hilbert_table_async(
    filtration: Filtration, d_max: int, executor: Optional[Executor] = None
) -> GradedDimTable:
    return await _gather_rows("edge", filtration, d_max, executor)


async def sr_hilbert_table_async(
    filtration: Filtration, d_max: int, executor: Optional[Executor] = None
) -> GradedDimTable:
    return await _gather_rows("sr", filtration, d_max, executor)


async def run_analyze_async(
    config: AnalysisConfig,
    filtration: Optional[Filtration] = None,
    executor: Optional[Executor] = None,
) -> AnalysisReport:
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(executor, run_analyze, config, filtration)
