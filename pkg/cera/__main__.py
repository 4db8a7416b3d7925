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

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple, Union

from cera._impl._api_types import Error, InputError, InvariantViolation
from cera._impl._cera import associated_graded_table, hilbert_table
from cera._impl._filtration import Filtration
from cera._impl._functorial import (
    FilteredMorphism,
    induced_image_check,
    temporal_collapse,
    verify_naturality,
)
from cera._impl._helper import (
    configure_logging,
    metric_choices,
    order_policy_choices,
    vertex_mode_choices,
)
from cera._impl._hilbert import GradedDimTable
from cera._impl._io import (
    format_filtration,
    load_filtration,
    parse_complex_levels,
    parse_morphism,
    write_filtration,
)
from cera._impl._oracle import run_oracle
from cera._impl._report import AnalysisConfig, Analyzer, emit
from cera._impl._simplicial import simplicial_hilbert_table, sr_hilbert_table

try:
    from cera._repo_version import version
except ImportError:  # pragma: no cover
    version = "0.0.0"

logger = logging.getLogger("cera")


def _parse_grid(value: str) -> Union[str, Tuple[float, ...]]:
    if value == "auto":
        return value
    try:
        return tuple(float(t) for t in value.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be 'auto' or a list of numbers, got {value!r}")


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--delta", type=float, default=1.0, help="maximal time gap of an edge")
    parser.add_argument("--epsilon", type=float, default=1.0, help="maximal spatial distance")
    parser.add_argument("--metric", choices=metric_choices(), default="euclidean")
    parser.add_argument("--vertex-mode", choices=vertex_mode_choices(), default="full")
    parser.add_argument("--order", choices=order_policy_choices(), default="lex")
    parser.add_argument(
        "--grid",
        type=_parse_grid,
        default="auto",
        help="'auto' or comma separated time instants",
    )
    parser.add_argument(
        "--input-kind", choices=("auto", "events", "edges"), default="auto"
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="cera",
        description="Temporal bridge and Rees algebra analysis of causal graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="events to a filtration file")
    build.add_argument("input")
    build.add_argument("--out", help="edge-level CSV to write (default: stdout)")

    analyze = commands.add_parser("analyze", parents=[common], help="bridge and theorem report")
    analyze.add_argument("input")
    analyze.add_argument("--format", choices=("json", "csv", "dot"), default="json")
    analyze.add_argument("--out", help="report directory (default: JSON on stdout)")
    analyze.add_argument("--d-max", type=int, help="also compute Hilbert tables up to this degree")
    analyze.add_argument("--oracle", action="store_true", help="run the brute-force cross-checks")

    hilbert = commands.add_parser("hilbert", parents=[common], help="bigraded Hilbert tables")
    hilbert.add_argument("input")
    hilbert.add_argument("--d-max", type=int, default=4)
    hilbert.add_argument("--kind", choices=("edge", "sr"), default="edge")
    hilbert.add_argument(
        "--associated", action="store_true", help="successive quotients I_n/I_(n-1) instead"
    )
    hilbert.add_argument(
        "--complex", action="store_true", help="input is a JSON simplicial filtration"
    )
    hilbert.add_argument("--oracle", action="store_true")
    hilbert.add_argument("--out", help="CSV file to write (default: stdout)")

    collapse = commands.add_parser("collapse", parents=[common], help="ideal at T = 1")
    collapse.add_argument("input")

    morphism = commands.add_parser("morphism", parents=[common], help="check a vertex map")
    morphism.add_argument("source")
    morphism.add_argument("target")
    morphism.add_argument("map")
    return parser


def _load(args: argparse.Namespace, path: str) -> Filtration:
    config = _config(args, path)
    return load_filtration(path, config.input_kind, config.params, config.grid, config.vertex_mode)


def _config(args: argparse.Namespace, path: str) -> AnalysisConfig:
    return AnalysisConfig(
        input=path,
        input_kind=args.input_kind,
        delta=args.delta,
        epsilon=args.epsilon,
        metric=args.metric,
        vertex_mode=args.vertex_mode,
        order_policy=args.order,
        grid=args.grid,
        d_max=getattr(args, "d_max", None),
        hilbert=(getattr(args, "kind"),) if hasattr(args, "kind") else ("edge", "sr"),
        oracle=getattr(args, "oracle", False),
    )


def _table_csv(table: GradedDimTable, first_level: int) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n"] + [f"d{d}" for d in range(table.d_max + 1)])
    for n, row in enumerate(table.cells, start=first_level):
        writer.writerow([n, *row])
    return out.getvalue()


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise Error(f"cannot write {out}: {e.strerror or e}")


def _run_build(args: argparse.Namespace) -> int:
    filtration = _load(args, args.input)
    if args.out:
        write_filtration(filtration, args.out)
    else:
        sys.stdout.write(format_filtration(filtration))
    return 0


def _run_analyze(args: argparse.Namespace) -> int:
    analyzer = Analyzer(_config(args, args.input))
    analyzer.on("level", lambda record: logger.info("level %(n)s: beta0=%(beta0)s dim_B=%(dim_B)s", record))
    analyzer.on("oracle", lambda check: logger.debug("oracle %s", check))
    analyzer.on("done", lambda report: logger.info("bridge polynomial %s", report.bridge_polynomial))
    report = analyzer.run()
    if args.out:
        emit(report, args.format, args.out)
    elif args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        raise InputError(f"--format {args.format} writes several files and needs --out")
    return 0


def _run_hilbert(args: argparse.Namespace) -> int:
    if args.d_max < 0:
        raise InputError(f"--d-max must be nonnegative, got {args.d_max}")
    if args.complex:
        table = simplicial_hilbert_table(
            parse_complex_levels(args.input), args.d_max, oracle=args.oracle
        )
        _write(_table_csv(table, 0), args.out)
        return 0
    filtration = _load(args, args.input)
    if args.associated:
        if args.kind != "edge":
            raise InputError("--associated is only defined for edge ideals")
        _write(_table_csv(associated_graded_table(filtration, args.d_max), 1), args.out)
        return 0
    if args.kind == "edge":
        table = hilbert_table(filtration, args.d_max, oracle=args.oracle)
    else:
        table = sr_hilbert_table(filtration, args.d_max)
        if args.oracle:
            run_oracle(filtration, args.order, args.d_max, ("sr",))
    _write(_table_csv(table, 0), args.out)
    return 0


def _run_collapse(args: argparse.Namespace) -> int:
    ideal = temporal_collapse(_load(args, args.input))
    sys.stdout.write(f"{ideal}\n")
    return 0


def _run_morphism(args: argparse.Namespace) -> int:
    source = _load(args, args.source)
    target = _load(args, args.target)
    morphism = FilteredMorphism(source, target, parse_morphism(args.map))
    violations = morphism.violations()
    result: Dict[str, Any] = {
        "valid": not violations,
        "violations": [[list(edge), level] for edge, level in violations],
    }
    if not violations:
        result["induced_image"] = induced_image_check(morphism)
        result["naturality"] = verify_naturality(morphism)
        if not (result["induced_image"] and result["naturality"]):
            raise InvariantViolation("a valid morphism failed the functoriality checks")
    sys.stdout.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
    return 0 if not violations else 1


COMMANDS = {
    "build": _run_build,
    "analyze": _run_analyze,
    "hilbert": _run_hilbert,
    "collapse": _run_collapse,
    "morphism": _run_morphism,
}


def main(argv: Optional[Sequence[str]] = None) -> None:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        code = COMMANDS[args.command](args)
    except InvariantViolation as e:
        sys.stderr.write(f"cera: internal invariant violated: {e.message}\n")
        code = 2
    except Error as e:
        sys.stderr.write(f"cera: {e.message}\n")
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
