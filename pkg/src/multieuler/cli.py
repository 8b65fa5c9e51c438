"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 structural or input error,
3 search space too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .errors import GraphError, SearchSpaceTooLarge
from .graph import DirectedMultigraph, is_eulerian
from .graphfile import dump_graph, parse_graph_file
from .period import analyze, primitive_period_vector
from .rotor import check_settles
from .tours import DEFAULT_TOUR_CAP, construct_tour, count_tours, count_tours_bruteforce, validate_tour

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_STRUCTURAL = 2
EXIT_TOO_LARGE = 3


class InputError(GraphError):
    pass


def _read_graph(path: str) -> DirectedMultigraph:
    if path == "-":
        return parse_graph_file(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_file(text)


def _resolve_pi(g: DirectedMultigraph, text: str) -> tuple[int, ...]:
    if text == "primitive":
        return primitive_period_vector(g).entries
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--pi expects 'primitive' or comma-separated integers, got {text!r}") from None
    return values


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--tour expects comma-separated edge ids, got {text!r}") from None


def _by_vertex(g: DirectedMultigraph, values: Sequence[int]) -> dict[str, str]:
    return {str(v): str(x) for v, x in zip(g.vertices, values)}


def _human_vector(g: DirectedMultigraph, values: Sequence[int]) -> str:
    return " ".join(f"{v}={x}" for v, x in zip(g.vertices, values))


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    s = analyze(g)
    eulerian = is_eulerian(g)
    payload = {
        "kappa": _by_vertex(g, s.kappa),
        "pham_index": str(s.pham_index),
        "period_vector": _by_vertex(g, s.primitive_period),
        "unicycles": str(s.unicycles),
        "min_tour_length": str(s.minimal_tour_length),
        "eulerian": eulerian,
    }
    _emit(
        payload,
        args.json,
        [
            f"kappa: {_human_vector(g, s.kappa)}",
            f"pham_index: {s.pham_index}",
            f"period_vector: {_human_vector(g, s.primitive_period)}",
            f"unicycles: {s.unicycles}",
            f"min_tour_length: {s.minimal_tour_length}",
            f"eulerian: {'true' if eulerian else 'false'}",
        ],
    )
    return EXIT_OK


def cmd_tour(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    pi = _resolve_pi(g, args.pi)
    tour = construct_tour(g, pi, start_vertex=args.start_vertex)
    ids = ",".join(map(str, tour))
    payload = {
        "period_vector": _by_vertex(g, pi),
        "length": len(tour),
        "tour": list(tour),
    }
    _emit(payload, args.json, [f"period_vector: {_human_vector(g, pi)}", f"length: {len(tour)}", f"tour: {ids}"])
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    pi = _resolve_pi(g, args.pi)
    result = count_tours(g, pi, args.start_edge)
    payload = {
        "period_vector": _by_vertex(g, pi),
        "start_edge": args.start_edge,
        "count": str(result.value),
    }
    line = str(result.value)
    status = EXIT_OK
    if args.oracle:
        oracle = count_tours_bruteforce(g, pi, args.start_edge, cap=args.cap).value
        agree = oracle == result.value
        payload["oracle"] = str(oracle)
        payload["agree"] = agree
        line += f" (oracle: {oracle}, {'agree' if agree else 'DISAGREE'})"
        status = EXIT_OK if agree else EXIT_FAILED
    _emit(payload, args.json, [line])
    return status


def cmd_rotor(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    s = check_settles(g, args.trials, args.seed)
    payload = {
        "trials": s.trials,
        "passed": s.passed,
        "failed": s.failed,
        "expected_period": str(s.expected_period),
        "periods": [str(p) for p in s.periods],
        "max_transient": s.max_transient,
    }
    _emit(
        payload,
        args.json,
        [
            f"trials: {s.trials}",
            f"passed: {s.passed}",
            f"failed: {s.failed}",
            f"expected_period: {s.expected_period}",
            f"periods: {' '.join(map(str, s.periods))}",
            f"max_transient: {s.max_transient}",
        ],
    )
    return EXIT_OK if s.failed == 0 else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    pi = _resolve_pi(g, args.pi)
    report = validate_tour(g, pi, _parse_ids(args.tour))
    payload = {"valid": report.valid, "reason": report.reason, "edge": report.edge, "position": report.position}
    _emit(payload, args.json, ["valid" if report.valid else f"invalid: {report.reason}"])
    return EXIT_OK if report.valid else EXIT_FAILED


def cmd_dump(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_graph(_read_graph(args.path)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multieuler", description="Multi-Eulerian tours of directed multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, json_flag: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("path", help="graph file ('-' for stdin)")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "tree counts, Pham index, period vector, minimal tour length")

    p = add("tour", cmd_tour, "construct a pi-Eulerian tour")
    p.add_argument("--pi", default="primitive", help="'primitive' or comma-separated entries in vertex order")
    p.add_argument("--start-vertex", default=None)

    p = add("count", cmd_count, "count pi-Eulerian tours starting with an edge")
    p.add_argument("--pi", default="primitive")
    p.add_argument("--start-edge", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search")
    p.add_argument("--cap", type=int, default=DEFAULT_TOUR_CAP, help="largest tour length the oracle will search")

    p = add("rotor", cmd_rotor, "check that random rotor walks settle")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify", cmd_verify, "validate a tour given as edge ids")
    p.add_argument("--pi", default="primitive")
    p.add_argument("--tour", required=True, help="comma-separated edge ids")

    add("dump", cmd_dump, "print the graph in edge-list format", json_flag=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
