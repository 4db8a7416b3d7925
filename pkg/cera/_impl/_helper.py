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
import os
import sys
from pathlib import Path
from typing import Iterable, Literal, Tuple, Union, get_args

from cera._impl._api_types import InputError

VertexId = int
Edge = Tuple[VertexId, VertexId]

Metric = Literal["euclidean", "manhattan", "chebyshev"]
VertexMode = Literal["full", "incident"]
OrderPolicy = Literal["lex", "input-order"]
EdgeClass = Literal["bridge", "cycle", "expansion", "creation"]
ReportFormat = Literal["json", "csv", "dot"]
InputKind = Literal["auto", "events", "edges"]
HilbertKind = Literal["edge", "sr"]

# Report integers above this bound are serialized as decimal strings.
MAX_SAFE_INTEGER = 2**53 - 1


def check_choice(value: str, choices: Iterable[str], name: str) -> str:
    allowed = tuple(choices)
    if value not in allowed:
        raise InputError(f"{name} must be one of {', '.join(allowed)}, got {value!r}")
    return value


def metric_choices() -> Tuple[str, ...]:
    return get_args(Metric)


def vertex_mode_choices() -> Tuple[str, ...]:
    return get_args(VertexMode)


def order_policy_choices() -> Tuple[str, ...]:
    return get_args(OrderPolicy)


def undirected(edge: Edge) -> Edge:
    u, v = edge
    return (u, v) if u <= v else (v, u)


def serialize_int(value: int) -> Union[int, str]:
    if abs(value) > MAX_SAFE_INTEGER:
        return str(value)
    return value


def parse_int(value: Union[int, str]) -> int:
    return value if isinstance(value, int) else int(value)


def make_dirs_for_file(path: Union[Path, str]) -> None:
    if not os.path.isabs(path):
        path = Path.cwd() / path
    os.makedirs(os.path.dirname(path), exist_ok=True)


def configure_logging(verbose: bool = False) -> None:
    level = logging.WARNING
    if verbose:
        level = logging.INFO
    if "DEBUGCERA" in os.environ:  # pragma: no cover
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )
