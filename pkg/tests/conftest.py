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
from pathlib import Path
from typing import Generator

import pytest

from cera.sync_api import Filtration, parse_edge_levels

_dirname = Path(__file__).parent


@pytest.fixture(scope="session")
def event_loop() -> Generator[asyncio.AbstractEventLoop, None, None]:
    loop = asyncio.new_event_loop()
    yield loop
    loop.close()


@pytest.fixture(scope="session")
def assetdir() -> Path:
    return _dirname / "assets"


@pytest.fixture
def example_i(assetdir: Path) -> Filtration:
    return parse_edge_levels(assetdir / "example_i.csv")


@pytest.fixture
def example_ii(assetdir: Path) -> Filtration:
    return parse_edge_levels(assetdir / "example_ii.csv")


@pytest.fixture
def example_iii(assetdir: Path) -> Filtration:
    return parse_edge_levels(assetdir / "example_iii.csv")


@pytest.fixture
def lattice(assetdir: Path) -> Filtration:
    return parse_edge_levels(assetdir / "lattice_levels.csv")
