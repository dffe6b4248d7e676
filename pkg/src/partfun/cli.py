"""Command-line front end.

Five verbs: `eval` computes a partition value, `classify` emits the
tractability verdict with its certificate, `invariant` compares a model value
against its independent combinatorial oracle, `connection` reports a
connection matrix with its PSD/rank facts, and `verify` runs the identity
suites.  Output is a single JSON object on stdout; errors go to stderr as
``{"error": <type>, "message": <text>}``.  Exit status: 0 on success, 1 when
a computation or verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .connection import MAX_BASIS_EDGES, MAX_BASIS_VERTICES, connection_report, enumerate_klabeled
from .errors import (
    BadParameter,
    FormatError,
    PartfunError,
)
from .evaluator import z_brute
from .fastpath import classify, z_fast
from .formats import parse_diagonal, parse_graph, parse_matrix
from .graph import components
from .models import (
    NamedModel,
    constant_diagonal_matrix,
    even_induced_subgraphs,
    independent_sets,
    ising_polynomial,
    matrix_of,
    nowhere_zero_flows,
    ordered_max_cuts,
    potts_partition,
    proper_colorings,
    tutte_eval_brute,
)
from .rings import RAT
from .verify import SUITE_NAMES, run_suite

INVARIANT_NAMES = (
    "independent-sets",
    "proper-colorings",
    "even-induced-subgraphs",
    "nowhere-zero-flows",
    "ordered-max-cuts",
    "potts",
    "ising",
    "tutte",
)

# input problems exit 2; anything that fails during a legitimate computation
# (budget blown, no tractable certificate, oracle inconsistency) exits 1
_INPUT_ERRORS = (
    "FormatError",
    "BadParameter",
    "DuplicateNode",
    "BadPartition",
    "LabelMismatch",
    "DimensionMismatch",
    "PinningConflict",
    "AsymmetricTensor",
    "ArityMismatch",
    "NotSymmetric",
    "NegativeEntries",
    "ParallelEdges",
    "TooLarge",
    "RingUnsupported",
    "NotSimple",
    "UnsupportedModulus",
    "NotPowerMatrix",
)


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of printing usage and exiting."""

    def error(self, message):
        raise FormatError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partfun", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a partition value on a graph")
    p.add_argument("--matrix", required=True, help="weight matrix file")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--weights", help="vertex weight (diagonal) file")
    p.add_argument("--fast", action="store_true",
                   help="use the closed form when the matrix is tractable")
    p.add_argument("--budget", type=int, help="enumeration budget override")

    p = sub.add_parser("classify", help="tractable / sharp-p-hard verdict")
    p.add_argument("--matrix", required=True, help="weight matrix file")

    p = sub.add_parser("invariant", help="model value vs combinatorial oracle")
    p.add_argument("--name", required=True, choices=INVARIANT_NAMES)
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--k", type=int, help="color / flow group size")
    p.add_argument("--n", type=int, help="number of spins (potts)")
    p.add_argument("--v", help="interaction parameter, a rational (potts, ising)")
    p.add_argument("--x", help="first Tutte coordinate, a rational")
    p.add_argument("--y", help="second Tutte coordinate, a rational")
    p.add_argument("--budget", type=int, help="enumeration budget override")

    p = sub.add_parser("connection", help="connection matrix report")
    p.add_argument("--matrix", required=True, help="weight matrix file")
    p.add_argument("--k", required=True, type=int, help="number of labeled vertices")
    p.add_argument("--max-vertices", type=int, default=MAX_BASIS_VERTICES // 2,
                   help="basis graphs use at most this many vertices")
    p.add_argument("--max-edges", type=int, default=MAX_BASIS_EDGES // 3,
                   help="basis graphs use at most this many edge occurrences")
    p.add_argument("--budget", type=int, help="enumeration budget override")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    p.add_argument("--max-vertices", type=int, default=4,
                   help="graph size cap for the suite corpora")
    return parser


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _rational(text: str, flag: str) -> Fraction:
    if text is None:
        raise BadParameter(f"missing {flag}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParameter(f"{flag} must be a rational, got {text!r}") from exc


def _require_int(value, flag: str) -> int:
    if value is None:
        raise BadParameter(f"missing {flag}")
    return value


def _agreement(z_json, oracle_json, agree: bool) -> dict:
    return {"z": z_json, "oracle": oracle_json, "agree": bool(agree)}


def _cmd_eval(args):
    a = parse_matrix(_read(args.matrix))
    g, pin, _ = parse_graph(_read(args.graph))
    weights = parse_diagonal(_read(args.weights)) if args.weights else None
    if args.fast and weights is None and not pin:
        cls = classify(a)
        if cls.is_tractable:
            return {"value": a.ring.to_json(z_fast(a, g, cls))}, 0
    value = z_brute(a, g, pin=pin, weights=weights, budget=args.budget)
    # mixed-ring weights promote the result into the larger ring
    ring = a.ring
    if weights is not None and weights.ring.contains(ring):
        ring = weights.ring
    return {"value": ring.to_json(ring.coerce(value))}, 0


def _cmd_classify(args):
    a = parse_matrix(_read(args.matrix))
    return classify(a).to_json(), 0


def _cmd_invariant(args):
    g, pin, _ = parse_graph(_read(args.graph))
    if pin:
        raise BadParameter("invariant comparisons take unpinned graphs")
    name = args.name
    budget = args.budget

    if name == "independent-sets":
        a, _d = matrix_of(NamedModel("indep-set"))
        z = z_brute(a, g, budget=budget)
        oracle = independent_sets(g)
        return _agreement(str(z), str(oracle), z == oracle), 0

    if name == "proper-colorings":
        k = _require_int(args.k, "--k")
        a, _d = matrix_of(NamedModel("coloring", k=k))
        z = z_brute(a, g, budget=budget)
        oracle = proper_colorings(g, k)
        return _agreement(str(z), str(oracle), z == oracle), 0

    if name == "even-induced-subgraphs":
        a, _d = matrix_of(NamedModel("even-subgraph"))
        z = Fraction(z_brute(a, g, budget=budget), 2) + Fraction(2) ** (g.n - 1)
        oracle = even_induced_subgraphs(g)
        return _agreement(RAT.to_json(z), str(oracle), z == oracle), 0

    if name == "nowhere-zero-flows":
        k = _require_int(args.k, "--k")
        a, _d = matrix_of(NamedModel("flow", k=k))
        z = Fraction(1, k) ** g.n * z_brute(a, g, budget=budget)
        oracle = nowhere_zero_flows(g, k)
        return _agreement(RAT.to_json(z), str(oracle), z == oracle), 0

    if name == "ordered-max-cuts":
        a, _d = matrix_of(NamedModel("max-cut"))
        zp = z_brute(a, g, budget=budget)
        weight, count = ordered_max_cuts(g)
        z_json = {"degree": zp.degree, "leading": RAT.to_json(zp.leading())}
        oracle_json = {"weight": weight, "count": str(count)}
        agree = zp.degree == weight and zp.leading() == count
        return _agreement(z_json, oracle_json, agree), 0

    if name == "potts":
        n = _require_int(args.n, "--n")
        v = _rational(args.v, "--v")
        a, _d = matrix_of(NamedModel("potts", n=n, v=v))
        z = z_brute(a, g, budget=budget)
        oracle = potts_partition(g, n, v, budget=budget)
        return _agreement(RAT.to_json(z), RAT.to_json(oracle), z == oracle), 0

    if name == "ising":
        v = _rational(args.v, "--v")
        z = ising_polynomial(g, budget=budget).eval(v + 1)
        oracle = potts_partition(g, 2, v, budget=budget)
        return _agreement(RAT.to_json(z), RAT.to_json(oracle), z == oracle), 0

    if name == "tutte":
        x = _rational(args.x, "--x")
        y = _rational(args.y, "--y")
        n = (x - 1) * (y - 1)
        if n.denominator != 1 or n <= 0:
            raise BadParameter(f"(x-1)(y-1) = {n} is not a positive integer")
        n = int(n)
        a = constant_diagonal_matrix(n, y, 1)
        big_q = len(components(g))
        z = (y - 1) ** (big_q - g.n) * Fraction(1, n) ** big_q \
            * z_brute(a, g, budget=budget)
        oracle = tutte_eval_brute(g, x, y, budget=budget)
        return _agreement(RAT.to_json(z), RAT.to_json(oracle), z == oracle), 0

    raise BadParameter(f"unknown invariant {name!r}")


def _cmd_connection(args):
    a = parse_matrix(_read(args.matrix))
    basis = enumerate_klabeled(args.k, args.max_vertices, args.max_edges)
    return connection_report(a, basis, budget=args.budget), 0


def _cmd_verify(args):
    results = run_suite(args.suite, args.max_vertices)
    passed = all(r["status"] == "pass" for r in results)
    payload = {
        "suite": args.suite,
        "max-vertices": args.max_vertices,
        "results": results,
        "passed": passed,
    }
    return payload, 0 if passed else 1


_COMMANDS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "invariant": _cmd_invariant,
    "connection": _cmd_connection,
    "verify": _cmd_verify,
}


def _emit_error(exc: Exception) -> None:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(payload, separators=(",", ":")), file=sys.stderr)


def run(argv=None) -> int:
    """Parse argv, run one command, print its JSON; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, status = _COMMANDS[args.verb](args)
    except PartfunError as exc:
        _emit_error(exc)
        return 2 if type(exc).__name__ in _INPUT_ERRORS else 1
    print(json.dumps(payload, separators=(",", ":")))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
