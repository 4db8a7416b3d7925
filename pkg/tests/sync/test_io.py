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

import json
from pathlib import Path

import pytest

from cera.sync_api import (
    AdmissibilityParams,
    Filtration,
    InputError,
    load_filtration,
    parse_complex_levels,
    parse_edge_levels,
    parse_events,
    parse_morphism,
    write_filtration,
)
from cera._impl._io import detect_input_kind, format_filtration


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


def test_parse_edge_levels(example_iii: Filtration) -> None:
    assert example_iii.vertices == {1, 2, 3, 4, 5, 6}
    assert example_iii.k == 2
    assert example_iii.arrivals[(4, 5)] == 2
    assert example_iii.edge_order[0] == (1, 2)


def test_edge_level_directives(tmp_path: Path) -> None:
    path = _write(
        tmp_path / "levels.csv",
        "# vertices: 1 2 3 9\n# levels: 4\n# grid: 0.5 1 2 3\nu,v,level\n2,1,1\n",
    )
    filtration = parse_edge_levels(path, vertex_mode="incident")
    assert filtration.vertices == {1, 2, 3, 9}
    assert filtration.k == 4
    assert filtration.instant(3) == 2.0
    assert filtration.vertex_mode == "incident"
    assert filtration.edges(4) == {(2, 1)}


@pytest.mark.parametrize(
    "body,line,fragment",
    [
        ("u,v,level\n1,2,1\n2,1,2\n", 3, "already listed on line 2"),
        ("u,v,level\n1,2,one\n", 2, "level must be an integer"),
        ("u,v,level\n1,2,0\n", 2, "below 1"),
        ("u,v,level\n1,2\n", 2, "expected 3 fields"),
        ("# comment\nfrom,to,level\n", 2, "header must be u,v,level"),
    ],
)
def test_edge_level_errors_carry_the_line(
    tmp_path: Path, body: str, line: int, fragment: str
) -> None:
    path = _write(tmp_path / "bad.csv", body)
    with pytest.raises(InputError) as exc_info:
        parse_edge_levels(path)
    assert exc_info.value.line == line
    assert fragment in exc_info.value.message
    assert exc_info.value.message.startswith(f"{path}:{line}:")


def test_edge_levels_rejects_undeclared_vertices(tmp_path: Path) -> None:
    path = _write(tmp_path / "levels.csv", "# vertices: 1 2\nu,v,level\n1,3,1\n")
    with pytest.raises(InputError, match="outside the vertex universe"):
        parse_edge_levels(path)


@pytest.mark.parametrize(
    "name,body",
    [
        ("empty.csv", ""),
        ("header.csv", "u,v,level\n"),
        ("comments.csv", "# vertices: 1 2\nu,v,level\n"),
        ("empty.json", '{"edges": []}'),
    ],
)
def test_edge_levels_without_levels(tmp_path: Path, name: str, body: str) -> None:
    path = _write(tmp_path / name, body)
    with pytest.raises(InputError, match="no levels") as exc_info:
        parse_edge_levels(path)
    assert exc_info.value.message.startswith(str(path))


def test_edge_levels_with_declared_levels_but_no_edges(tmp_path: Path) -> None:
    filtration = parse_edge_levels(_write(tmp_path / "quiet.csv", "# levels: 2\nu,v,level\n"))
    assert filtration.k == 2
    assert filtration.edges(2) == frozenset()


def test_edge_levels_json(tmp_path: Path) -> None:
    path = _write(
        tmp_path / "levels.json",
        json.dumps({"vertices": [1, 2, 3], "levels": 3, "edges": [[1, 2, 1], [3, 2, 3]]}),
    )
    filtration = parse_edge_levels(path)
    assert filtration.k == 3
    assert filtration.arrivals == {(1, 2): 1, (3, 2): 3}
    with pytest.raises(InputError, match="must be \\[u, v, level\\]"):
        parse_edge_levels(_write(tmp_path / "bad.json", '{"edges": [[1, 2]]}'))
    with pytest.raises(InputError) as exc_info:
        parse_edge_levels(_write(tmp_path / "broken.json", '{\n"edges": [\n'))
    assert exc_info.value.line is not None


def test_parse_events_forms(assetdir: Path, tmp_path: Path) -> None:
    events = parse_events(assetdir / "events.json")
    assert [e.vertex for e in events] == [1, 2, 3]
    assert events[1].coords == (0.5,)
    bare = _write(tmp_path / "bare.json", '[{"id": 7, "coords": [1, 2], "tau": 3}]')
    assert parse_events(bare)[0].tau == 3.0
    lattice = parse_events(assetdir / "lattice_events.csv")
    assert len(lattice) == 9
    assert lattice[0].coords == (1.0, 1.0)


def test_parse_events_errors(tmp_path: Path) -> None:
    with pytest.raises(InputError) as exc_info:
        parse_events(_write(tmp_path / "a.csv", "id,x1,tau\n1,0,0\n1,1,1\n"))
    assert exc_info.value.line == 3
    with pytest.raises(InputError, match="header must be id,x1,tau"):
        parse_events(_write(tmp_path / "b.csv", "id,y,tau\n"))
    with pytest.raises(InputError, match="tau must be a number"):
        parse_events(_write(tmp_path / "c.csv", "id,x1,tau\n1,0,soon\n"))
    with pytest.raises(InputError, match="needs id and tau"):
        parse_events(_write(tmp_path / "d.json", '{"events": [{"id": 1}]}'))
    with pytest.raises(InputError, match="cannot read"):
        parse_events(tmp_path / "missing.csv")


def test_write_filtration_reads_back(example_iii: Filtration, tmp_path: Path) -> None:
    path = tmp_path / "nested" / "out.csv"
    write_filtration(example_iii, path)
    again = parse_edge_levels(path)
    assert again.arrivals == example_iii.arrivals
    assert again.vertices == example_iii.vertices
    assert again.edge_order == example_iii.edge_order
    assert again.k == example_iii.k


def test_format_filtration_keeps_the_grid(assetdir: Path, tmp_path: Path) -> None:
    filtration = load_filtration(assetdir / "events.json")
    text = format_filtration(filtration)
    assert "# grid: 1.0\n" in text
    again = parse_edge_levels(_write(tmp_path / "built.csv", text))
    assert again.grid == filtration.grid
    assert again.vertices == {1, 2, 3}


def test_detect_input_kind(assetdir: Path, tmp_path: Path) -> None:
    assert detect_input_kind(assetdir / "events.json") == "events"
    assert detect_input_kind(assetdir / "lattice_events.csv") == "events"
    assert detect_input_kind(assetdir / "example_i.csv") == "edges"
    with pytest.raises(InputError):
        detect_input_kind(_write(tmp_path / "odd.csv", "a,b\n"))
    with pytest.raises(InputError, match="empty"):
        detect_input_kind(_write(tmp_path / "empty.csv", "# nothing\n"))


def test_load_filtration_from_events(assetdir: Path) -> None:
    filtration = load_filtration(assetdir / "events.json")
    assert filtration.k == 1
    assert filtration.edges(1) == {(1, 2)}
    assert filtration.vertices == {1, 2, 3}
    assert filtration.graph is not None

    regridded = load_filtration(assetdir / "events.json", grid=(0.5, 1.0, 2.0))
    assert regridded.k == 3
    assert regridded.arrivals == {(1, 2): 2}

    wide = load_filtration(
        assetdir / "events.json", "events", AdmissibilityParams(2.0, 3.0)
    )
    assert wide.edges(wide.k) == {(1, 2), (1, 3), (2, 3)}


def test_load_filtration_from_edges(assetdir: Path) -> None:
    filtration = load_filtration(assetdir / "example_i.csv", vertex_mode="incident")
    assert filtration.vertex_mode == "incident"
    assert filtration.graph is None


def test_parse_morphism(assetdir: Path, tmp_path: Path) -> None:
    assert parse_morphism(assetdir / "example_i_embedding.json") == {
        1: 10,
        2: 20,
        3: 30,
        4: 40,
    }
    csv_map = _write(tmp_path / "map.csv", "source,target\n1,5\n2,6\n")
    assert parse_morphism(csv_map) == {1: 5, 2: 6}
    with pytest.raises(InputError) as exc_info:
        parse_morphism(_write(tmp_path / "twice.csv", "source,target\n1,5\n1,6\n"))
    assert exc_info.value.line == 3


def test_parse_complex_levels_rejects_shrinking(tmp_path: Path) -> None:
    path = _write(
        tmp_path / "shrink.json",
        json.dumps({"vertices": [1, 2], "levels": [[[1, 2]], []]}),
    )
    with pytest.raises(InputError, match="not contained"):
        parse_complex_levels(path)
