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

from typing import List, Optional, TypedDict, Union

# These are the structures reports are serialized through. They are public and
# are a part of the stable API.

# Integers above 2**53 - 1 are written as decimal strings.
ReportInt = Union[int, str]


class LevelRecord(TypedDict):
    n: int
    t_n: Optional[float]
    edges: int
    beta0: int
    dim_B: int
    dim_C: int
    dim_R: int
    theorem_holds: bool
    discrepancy: int
    bridges: List[List[int]]


class ConfigEcho(TypedDict):
    input: str
    input_kind: str
    delta: float
    epsilon: float
    metric: str
    vertex_mode: str
    order_policy: str
    grid: Union[str, List[float]]
    d_max: Optional[int]
    hilbert: List[str]
    oracle: bool


class HilbertRecord(TypedDict):
    kind: str
    d_max: int
    cells: List[List[ReportInt]]


class OracleCheck(TypedDict):
    name: str
    level: Optional[int]
    expected: ReportInt
    actual: ReportInt
    passed: bool
