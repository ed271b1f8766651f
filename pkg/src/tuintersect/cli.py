"""Command-line front end.

    tuintersect paths GRAPH N [--critical-only] [--oracle] [--verify-tu] [--output FILE]
    tuintersect matchings GRAPH N ...
    tuintersect tu MATRIX.json N ...

Graph files are text, 0-based::

    c optional comment
    p digraph <num_vertices> <num_edges> <s> <t>
    e <u> <v>

or ``p bipartite <left> <right>`` followed by ``e <left_vertex> <right_vertex>`` lines.
Matrix files are JSON ``{"A": [[...], ...], "b": [...]}``.

Exit codes: 0 success, 2 bad input, 3 infeasible, 4 internal error,
5 when --verify-tu finds a minor with determinant outside {-1, 0, 1}.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .compression import vulnerability
from .core import (
    BipartiteInstance,
    DigraphInstance,
    TUCheck,
    TUSystem,
    bipartite_to_system,
    digraph_to_system,
    is_totally_unimodular_bruteforce,
    validate_tu_entries,
)
from .errors import BudgetExceeded, DimensionMismatch, DimensionTooLarge, Infeasible, InvalidInstance, TooManySolutions, TUIntersectError
from .lexsolver import solve_lexmin
from .simplesolver import solve_min_critical

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_INTERNAL = 4
EXIT_NOT_TU = 5

TU_CHECK_LIMIT = 200_000


class ParseError(InvalidInstance):
    pass


def parse_graph(text: str) -> DigraphInstance | BipartiteInstance:
    """Parse a graph file; n is left at 1 and set by the caller."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None:
                    raise ParseError(f"line {lineno}: duplicate header")
                if parts[1] == "digraph" and len(parts) == 6:
                    header = ("digraph", *map(int, parts[2:]))
                elif parts[1] == "bipartite" and len(parts) == 4:
                    header = ("bipartite", *map(int, parts[2:]))
                else:
                    raise ParseError(f"line {lineno}: malformed header {raw.strip()!r}")
            elif parts[0] == "e":
                if header is None:
                    raise ParseError(f"line {lineno}: edge before header")
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: edge needs two endpoints")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ParseError(f"line {lineno}: unknown line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, InvalidInstance):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if header is None:
        raise ParseError("missing 'p' header line")
    if header[0] == "digraph":
        _, nv, ne, s, t = header
        if ne != len(edges):
            raise ParseError(f"header declares {ne} edges, file has {len(edges)}")
        return DigraphInstance(nv, tuple(edges), s, t)
    _, left, right = header
    return BipartiteInstance(left, right, tuple(edges))


def parse_matrix(text: str) -> TUSystem:
    try:
        data = json.loads(text)
        a, b = data["A"], data["b"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad matrix file: {exc}") from None
    if not isinstance(a, list) or not all(isinstance(r, list) for r in a) or not isinstance(b, list):
        raise ParseError("'A' must be a list of rows and 'b' a list")
    for v in [v for r in a for v in r] + b:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"non-integer entry {v!r}")
    return TUSystem(a, b)


def build_report(system: TUSystem, n: int, *, critical_only: bool = False) -> dict:
    """Solve and return the JSON-ready report (without timing)."""
    if critical_only:
        bundle, critical = solve_min_critical(system, n)
        vuln = vulnerability(bundle)
        objective = critical
    else:
        bundle, vuln, objective = solve_lexmin(system, n)
        critical = vuln.critical
    return {
        "status": "optimal",
        "n": n,
        "d": system.d,
        "solutions": [[i for i, v in enumerate(x) if v] for x in bundle],
        "vulnerability": list(vuln.values),
        "critical": critical,
        "objective_bigint": str(objective),
    }


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="instance file")
    common.add_argument("n", type=int, help="number of solutions")
    common.add_argument("--critical-only", action="store_true", help="minimize only the critical count")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    common.add_argument("--verify-tu", action="store_true", help="check total unimodularity by brute force")
    common.add_argument("--seed", type=int, default=None, help="reserved; solvers are deterministic")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p = argparse.ArgumentParser(prog="tuintersect", description="n 0/1 solutions of a TU system with lexicographically minimal intersection")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("paths", parents=[common], help="n s-t paths in a digraph")
    sub.add_parser("matchings", parents=[common], help="n perfect matchings in a bipartite graph")
    sub.add_parser("tu", parents=[common], help="raw JSON system A x = b")
    return p


def _load(command: str, text: str) -> TUSystem:
    if command == "tu":
        system = parse_matrix(text)
        validate_tu_entries(system)
        return system
    inst = parse_graph(text)
    if command == "paths":
        if not isinstance(inst, DigraphInstance):
            raise ParseError("'paths' needs a 'p digraph' file")
        return digraph_to_system(inst)
    if not isinstance(inst, BipartiteInstance):
        raise ParseError("'matchings' needs a 'p bipartite' file")
    return bipartite_to_system(inst)


def _fail(code: int, msg: str) -> int:
    print(f"tuintersect: {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.n < 1:
        return _fail(EXIT_INPUT, "n must be positive")
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        return _fail(EXIT_INPUT, str(exc))
    try:
        system = _load(args.command, text)
    except (InvalidInstance, DimensionMismatch) as exc:
        return _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")

    extra = {}
    if args.verify_tu:
        check = is_totally_unimodular_bruteforce(system.a, TU_CHECK_LIMIT)
        if check is TUCheck.NO:
            return _fail(EXIT_NOT_TU, "matrix is not totally unimodular")
        if check is TUCheck.TOO_LARGE:
            return _fail(EXIT_INPUT, "matrix too large for the brute-force TU check")
        extra["tu_verified"] = True

    start = time.perf_counter()
    try:
        report = build_report(system, args.n, critical_only=args.critical_only)
    except Infeasible:
        report = {"status": "infeasible", "n": args.n, "d": system.d}
        _emit(report, start, args.output)
        return _fail(EXIT_INFEASIBLE, "infeasible")
    except TUIntersectError as exc:
        return _fail(EXIT_INTERNAL, f"{type(exc).__name__}: {exc}")
    report.update(extra)

    code = EXIT_OK
    if args.oracle:
        try:
            if args.critical_only:
                expected = oracle.brute_min_critical(system, args.n)
                agrees = expected == report["critical"]
                report["oracle"] = {"critical": expected, "agrees": agrees}
            else:
                expected = oracle.brute_lexmin(system, args.n)
                agrees = list(expected.values) == report["vulnerability"]
                report["oracle"] = {"vulnerability": list(expected.values), "agrees": agrees}
            if not agrees:
                code = EXIT_INTERNAL
        except (BudgetExceeded, TooManySolutions, DimensionTooLarge) as exc:
            report["oracle"] = {"skipped": str(exc)}
    _emit(report, start, args.output)
    if code != EXIT_OK:
        return _fail(code, "solver disagrees with brute-force oracle")
    return code


def _emit(report: dict, start: float, output) -> None:
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    text = json.dumps(report, sort_keys=True) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
