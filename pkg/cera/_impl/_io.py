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

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from cera._impl._api_types import InputError
from cera._impl._filtration import (
    Filtration,
    TimeGrid,
    auto_grid,
    build_filtration,
    from_edge_levels,
)
from cera._impl._graph import AdmissibilityParams, Event, build_causal_graph
from cera._impl._helper import InputKind, VertexId, VertexMode, make_dirs_for_file
from cera._impl._simplicial import SimplicialComplex, SimplicialFiltration

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}")


def _fail(path: PathLike, line: Optional[int], message: str) -> InputError:
    where = f"{path}:{line}" if line is not None else str(path)
    return InputError(f"{where}: {message}", line=line)


def _is_json(path: PathLike, text: str) -> bool:
    return Path(path).suffix.lower() == ".json" or text.lstrip()[:1] in ("{", "[")


def _load_json(path: PathLike, text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise _fail(path, e.lineno, f"invalid JSON: {e.msg}")


def _csv_rows(text: str) -> Iterator[Tuple[int, Optional[str], List[str]]]:
    """(line, directive, fields) per non-blank line. Comment lines carry the directive text."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            yield lineno, stripped[1:].strip(), []
            continue
        fields = next(csv.reader(io.StringIO(stripped)))
        yield lineno, None, [f.strip() for f in fields]


def _to_int(path: PathLike, line: Optional[int], value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise _fail(path, line, f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise _fail(path, line, f"{what} must be an integer, got {value!r}")


def _to_float(path: PathLike, line: Optional[int], value: Any, what: str) -> float:
    if isinstance(value, bool):
        raise _fail(path, line, f"{what} must be a number, got {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise _fail(path, line, f"{what} must be a number, got {value!r}")


def _make_event(
    path: PathLike, line: Optional[int], vertex: Any, coords: Sequence[Any], tau: Any
) -> Event:
    vertex_id = _to_int(path, line, vertex, "id")
    point = tuple(_to_float(path, line, c, "coordinate") for c in coords)
    time = _to_float(path, line, tau, "tau")
    try:
        return Event(vertex_id, point, time)
    except InputError as e:
        raise _fail(path, line, e.message)


def parse_events(path: PathLike) -> List[Event]:
    text = _read_text(path)
    events: List[Event] = []
    seen = set()
    if _is_json(path, text):
        data = _load_json(path, text)
        items = data.get("events") if isinstance(data, dict) else data
        if not isinstance(items, list):
            raise _fail(path, None, "expected a list of events")
        for index, item in enumerate(items):
            if not isinstance(item, dict) or "id" not in item or "tau" not in item:
                raise _fail(path, None, f"event #{index} needs id and tau")
            event = _make_event(path, None, item["id"], item.get("coords", []), item["tau"])
            if event.vertex in seen:
                raise _fail(path, None, f"duplicate vertex id {event.vertex}")
            seen.add(event.vertex)
            events.append(event)
        return events

    header: Optional[List[str]] = None
    for lineno, directive, fields in _csv_rows(text):
        if directive is not None:
            continue
        if header is None:
            header = [f.lower() for f in fields]
            expected = ["id"] + [f"x{i}" for i in range(1, len(header) - 1)] + ["tau"]
            if len(header) < 2 or header != expected:
                raise _fail(path, lineno, f"header must be {','.join(expected)}")
            continue
        if len(fields) != len(header):
            raise _fail(path, lineno, f"expected {len(header)} fields, got {len(fields)}")
        event = _make_event(path, lineno, fields[0], fields[1:-1], fields[-1])
        if event.vertex in seen:
            raise _fail(path, lineno, f"duplicate vertex id {event.vertex}")
        seen.add(event.vertex)
        events.append(event)
    if header is None:
        raise _fail(path, None, "no header row")
    return events


def _parse_directive(
    path: PathLike, lineno: int, directive: str, settings: Dict[str, Any]
) -> None:
    name, _, value = directive.partition(":")
    name = name.strip().lower()
    if name == "vertices":
        settings["vertices"] = [
            _to_int(path, lineno, v, "vertex") for v in value.replace(",", " ").split()
        ]
    elif name == "levels":
        settings["levels"] = _to_int(path, lineno, value, "levels")
    elif name == "grid":
        settings["grid"] = [
            _to_float(path, lineno, t, "grid instant")
            for t in value.replace(",", " ").split()
        ]


def _edge_filtration(
    path: PathLike,
    rows: List[Tuple[int, int, int]],
    settings: Dict[str, Any],
    vertex_mode: VertexMode,
) -> Filtration:
    try:
        grid = TimeGrid(tuple(settings["grid"])) if settings.get("grid") else None
        return from_edge_levels(
            rows, settings.get("levels"), settings.get("vertices"), vertex_mode, grid
        )
    except InputError as e:
        raise _fail(path, e.line, e.message)


def parse_edge_levels(path: PathLike, vertex_mode: VertexMode = "full") -> Filtration:
    text = _read_text(path)
    settings: Dict[str, Any] = {}
    rows: List[Tuple[int, int, int]] = []
    if _is_json(path, text):
        data = _load_json(path, text)
        if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
            raise _fail(path, None, "expected an object with an edges list")
        for entry in data["edges"]:
            if not isinstance(entry, list) or len(entry) != 3:
                raise _fail(path, None, f"edge entry {entry!r} must be [u, v, level]")
            rows.append(
                (
                    _to_int(path, None, entry[0], "u"),
                    _to_int(path, None, entry[1], "v"),
                    _to_int(path, None, entry[2], "level"),
                )
            )
        if "vertices" in data:
            settings["vertices"] = [_to_int(path, None, v, "vertex") for v in data["vertices"]]
        if "levels" in data:
            settings["levels"] = _to_int(path, None, data["levels"], "levels")
        if data.get("grid"):
            settings["grid"] = [_to_float(path, None, t, "grid instant") for t in data["grid"]]
        return _edge_filtration(path, rows, settings, vertex_mode)

    header_seen = False
    seen: Dict[Tuple[int, int], int] = {}
    for lineno, directive, fields in _csv_rows(text):
        if directive is not None:
            _parse_directive(path, lineno, directive, settings)
            continue
        if not header_seen:
            if [f.lower() for f in fields] != ["u", "v", "level"]:
                raise _fail(path, lineno, "header must be u,v,level")
            header_seen = True
            continue
        if len(fields) != 3:
            raise _fail(path, lineno, f"expected 3 fields, got {len(fields)}")
        u = _to_int(path, lineno, fields[0], "u")
        v = _to_int(path, lineno, fields[1], "v")
        level = _to_int(path, lineno, fields[2], "level")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise _fail(path, lineno, f"pair {{{u}, {v}}} already listed on line {seen[pair]}")
        seen[pair] = lineno
        if level < 1:
            raise _fail(path, lineno, f"level {level} is below 1")
        rows.append((u, v, level))
    return _edge_filtration(path, rows, settings, vertex_mode)


def parse_complex_levels(path: PathLike) -> SimplicialFiltration:
    data = _load_json(path, _read_text(path))
    if not isinstance(data, dict) or not isinstance(data.get("levels"), list):
        raise _fail(path, None, "expected an object with a levels list")
    try:
        vertices = [_to_int(path, None, v, "vertex") for v in data.get("vertices", [])]
        complexes = []
        for facets in data["levels"]:
            complexes.append(
                SimplicialComplex(
                    vertices,
                    [[_to_int(path, None, v, "vertex") for v in facet] for facet in facets],
                )
            )
        return SimplicialFiltration(complexes)
    except InputError as e:
        raise _fail(path, None, e.message)


def parse_morphism(path: PathLike) -> Dict[VertexId, VertexId]:
    text = _read_text(path)
    mapping: Dict[VertexId, VertexId] = {}
    if _is_json(path, text):
        data = _load_json(path, text)
        raw = data.get("vertex_map") if isinstance(data, dict) else None
        if not isinstance(raw, dict):
            raise _fail(path, None, "expected an object with a vertex_map")
        for source, target in raw.items():
            mapping[_to_int(path, None, source, "source")] = _to_int(
                path, None, target, "target"
            )
        return mapping
    header_seen = False
    for lineno, directive, fields in _csv_rows(text):
        if directive is not None:
            continue
        if not header_seen:
            if [f.lower() for f in fields] != ["source", "target"]:
                raise _fail(path, lineno, "header must be source,target")
            header_seen = True
            continue
        if len(fields) != 2:
            raise _fail(path, lineno, f"expected 2 fields, got {len(fields)}")
        source = _to_int(path, lineno, fields[0], "source")
        if source in mapping:
            raise _fail(path, lineno, f"vertex {source} is mapped twice")
        mapping[source] = _to_int(path, lineno, fields[1], "target")
    return mapping


def format_filtration(filtration: Filtration) -> str:
    """The edge-level CSV that parse_edge_levels reads back."""
    out = io.StringIO()
    out.write(f"# vertices: {' '.join(str(v) for v in sorted(filtration.vertices))}\n")
    out.write(f"# levels: {filtration.k}\n")
    if filtration.grid is not None:
        out.write(f"# grid: {' '.join(repr(t) for t in filtration.grid.instants)}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["u", "v", "level"])
    for u, v in filtration.edge_order:
        writer.writerow([u, v, filtration.arrivals[(u, v)]])
    return out.getvalue()


def write_filtration(filtration: Filtration, path: PathLike) -> None:
    text = format_filtration(filtration)
    try:
        make_dirs_for_file(path)
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror or e}")


def detect_input_kind(path: PathLike) -> InputKind:
    text = _read_text(path)
    if _is_json(path, text):
        data = _load_json(path, text)
        if isinstance(data, list) or (isinstance(data, dict) and "events" in data):
            return "events"
        if isinstance(data, dict) and "edges" in data:
            return "edges"
        raise _fail(path, None, "cannot tell events from edges")
    for lineno, directive, fields in _csv_rows(text):
        if directive is not None:
            continue
        first = fields[0].lower() if fields else ""
        if first == "id":
            return "events"
        if first == "u":
            return "edges"
        raise _fail(path, lineno, "cannot tell events from edges by the header")
    raise _fail(path, None, "file is empty")


def load_filtration(
    path: PathLike,
    kind: InputKind = "auto",
    params: Optional[AdmissibilityParams] = None,
    grid: Union[str, Sequence[float]] = "auto",
    vertex_mode: VertexMode = "full",
) -> Filtration:
    """Events go through the admissibility scan and a time grid; edge files load directly."""
    if kind == "auto":
        kind = detect_input_kind(path)
    if kind == "edges":
        return parse_edge_levels(path, vertex_mode)
    events = parse_events(path)
    graph = build_causal_graph(events, params or AdmissibilityParams(1.0, 1.0))
    time_grid = auto_grid(graph) if grid == "auto" else TimeGrid(tuple(grid))
    logger.info("%r on a %d-instant grid", graph, len(time_grid))
    return build_filtration(graph, time_grid, vertex_mode)
