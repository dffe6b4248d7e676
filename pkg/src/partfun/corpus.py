"""Deterministic corpora for identity suites: small graph families, graph
sweeps up to isomorphism, and a shared stable of small weight matrices.

Exhaustive sweeps are capped where labeled enumeration stays cheap; the
curated lists extend coverage to the stated vertex/edge bounds with named
families instead of full enumeration.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations

from .errors import BadParameter, TooLarge
from .evaluator import WeightMatrix
from .fastpath import classify
from .graph import Multigraph, components
from .rings import INT, POLY, X


def path_graph(n: int) -> Multigraph:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    """C1 is a loop, C2 a doubled edge."""
    if n < 1:
        raise BadParameter("cycle needs n >= 1")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Multigraph:
    if n < 0:
        raise BadParameter("need n >= 0")
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Multigraph:
    """One center (vertex 0) joined to n - 1 leaves."""
    if n < 1:
        raise BadParameter("star needs n >= 1")
    return Multigraph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def canonical_form(g: Multigraph):
    """Minimum edge encoding over all vertex relabelings; equal forms mean
    isomorphic graphs.  Factorial cost, for small graphs only."""
    if g.n > 7:
        raise TooLarge("canonical forms are factorial; 7 vertices is the cap")
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(
            (perm[u], perm[v], m) if perm[u] <= perm[v] else (perm[v], perm[u], m)
            for u, v, m in g.edges
        ))
        if best is None or key < best:
            best = key
    return (g.n, best)


def simple_graphs_upto(max_vertices: int):
    """One representative per isomorphism class of simple graphs with
    0..max_vertices vertices, in deterministic order."""
    if max_vertices > 6:
        raise TooLarge("simple-graph sweep capped at 6 vertices")
    out = []
    seen = set()
    for n in range(max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Multigraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def connected_multigraphs(max_vertices: int, max_edges: int):
    """Exhaustive connected multigraphs (loops and parallels included) up to
    isomorphism.  Deliberately capped where labeled enumeration is cheap."""
    if max_vertices > 4 or max_edges > 8:
        raise TooLarge("exhaustive multigraph sweep capped at 4 vertices / 8 edges")
    out = []
    seen = set()
    for n in range(1, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        for e in range(max_edges + 1):
            for occ in combinations_with_replacement(slots, e):
                if len({v for uv in occ for v in uv} | {0}) < n:
                    continue
                g = Multigraph(n, occ)
                if len(components(g)) != 1:
                    continue
                key = canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    out.append(g)
    return out


def curated_multigraphs(max_vertices: int, max_edges: int):
    """Hand-picked connected families reaching the given bounds: cycles,
    cliques, thickened stars and paths, theta graphs, loop-heavy graphs."""
    candidates = [
        cycle_graph(max_vertices),
        complete_graph(4),
        # K4 with one doubled edge
        Multigraph(4, [(0, 1, 2), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        # theta: two hubs joined by three length-2 paths
        Multigraph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
        # star with every edge doubled
        Multigraph(
            max_vertices, [(0, i, 2) for i in range(1, max_vertices)]
        ),
        # path with every edge doubled
        Multigraph(
            max_vertices, [(i, i + 1, 2) for i in range(max_vertices - 1)]
        ),
        # triangle with a loop at every vertex
        Multigraph(3, [(0, 1), (1, 2), (0, 2), (0, 0), (1, 1), (2, 2)]),
        # triangle, all edges doubled, one loop
        Multigraph(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2), (0, 0)]),
        # cycle with one chord and one doubled edge
        Multigraph(
            max_vertices,
            [(i, (i + 1) % max_vertices) for i in range(max_vertices)]
            + [(0, 2), (0, 1)],
        ),
        # single vertex stacked with loops
        Multigraph(1, [(0, 0, max_edges)]),
        # two vertices, all occurrences parallel
        Multigraph(2, [(0, 1, max_edges)]),
    ]
    out = []
    seen = set()
    for g in candidates:
        if g.n > max_vertices or g.num_edges() > max_edges:
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# matrices

def int_matrix_corpus():
    """Named small integer matrices exercising every structural case."""
    return [
        ("indep-set", WeightMatrix(INT, [[1, 1], [1, 0]])),
        ("weighted-indep-set", WeightMatrix(INT, [[1, 2], [2, 0]])),
        ("two-colorings", WeightMatrix(INT, [[0, 1], [1, 0]])),
        ("three-colorings", WeightMatrix(INT, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])),
        ("even-degrees", WeightMatrix(INT, [[1, -1], [-1, 1]])),
        ("even-subgraphs", WeightMatrix(INT, [[1, 1], [1, -1]])),
        ("rank-one", WeightMatrix(INT, [[1, 2], [2, 4]])),
        ("two-blocks", WeightMatrix(INT, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])),
        ("scaled-rank-one", WeightMatrix(INT, [[4, 6, 2], [6, 9, 3], [2, 3, 1]])),
        ("with-zero-row", WeightMatrix(INT, [[2, 0], [0, 0]])),
    ]


def nonneg_int_corpus():
    return [(name, a) for name, a in int_matrix_corpus() if a.is_nonneg()]


def poly_matrix_corpus():
    one = POLY.one
    return [
        ("max-cut", WeightMatrix(POLY, [[one, X], [X, one]])),
        ("ising", WeightMatrix(POLY, [[X, one], [one, X]])),
        ("power-diag", WeightMatrix(POLY, [[X**2, one], [one, X]])),
    ]


def symmetric01_matrices(max_n: int = 4):
    """Every symmetric 0-1 matrix of size 1..max_n (all of them, no dedup)."""
    out = []
    for n in range(1, max_n + 1):
        positions = [(i, j) for i in range(n) for j in range(i, n)]
        for mask in range(1 << len(positions)):
            rows = [[0] * n for _ in range(n)]
            for b, (i, j) in enumerate(positions):
                if mask >> b & 1:
                    rows[i][j] = rows[j][i] = 1
            out.append(WeightMatrix(INT, rows))
    return out


def tractable_nonneg_matrices(max_n: int = 3, max_entry: int = 3):
    """All symmetric non-negative integer matrices up to max_n x max_n with
    entries <= max_entry that classify tractable."""
    out = []
    for n in range(1, max_n + 1):
        positions = [(i, j) for i in range(n) for j in range(i, n)]
        for combo in _entry_tuples(len(positions), max_entry):
            rows = [[0] * n for _ in range(n)]
            for val, (i, j) in zip(combo, positions):
                rows[i][j] = rows[j][i] = val
            a = WeightMatrix(INT, rows)
            if classify(a).is_tractable:
                out.append(a)
    return out


def _entry_tuples(k, max_entry):
    if k == 0:
        yield ()
        return
    for rest in _entry_tuples(k - 1, max_entry):
        for v in range(max_entry + 1):
            yield rest + (v,)
