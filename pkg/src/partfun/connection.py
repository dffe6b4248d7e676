"""Connection matrices: gluings of k-labeled graphs evaluated by a graph
parameter, with exact positive-semidefiniteness and rank checks.

Partition functions produce PSD connection matrices of rank at most n^k at
arity k; a graph parameter that is not a partition function can fail PSD,
and the witness finder locates a small principal submatrix showing it.
Bases here are finite, explicitly enumerated windows into the (infinite)
space of k-labeled graphs; repeating isomorphic graphs is harmless for both
checks, so no isomorphism testing is done.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import LabelMismatch, NotSymmetric, RingUnsupported, TooLarge
from .evaluator import WeightMatrix, z_brute
from .graph import LabeledGraph, Multigraph, glue
from .rings import INT, POLY, RAT, exact_rank


class GraphBasis:
    """Ordered list of k-labeled graphs; order fixes the matrix layout."""

    __slots__ = ("k", "graphs")

    def __init__(self, k, graphs):
        graphs = tuple(graphs)
        for lg in graphs:
            if lg.k != k:
                raise LabelMismatch(f"basis of arity {k} got a graph with {lg.k} labels")
        self.k = k
        self.graphs = graphs

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


MAX_BASIS_VERTICES = 6
MAX_BASIS_EDGES = 6


def enumerate_klabeled(k: int, max_vertices: int, max_edges: int) -> GraphBasis:
    """All multigraphs on <= max_vertices vertices with <= max_edges edge
    occurrences, the first k vertices labeled 0..k-1.

    Deterministic order: vertex count ascending, then edge-occurrence count,
    then lexicographic on the sorted occurrence list.  Isomorphic duplicates
    are kept on purpose.
    """
    if not 0 <= k <= max_vertices <= MAX_BASIS_VERTICES or max_edges > MAX_BASIS_EDGES:
        raise TooLarge(
            f"need 0 <= k <= max_vertices <= {MAX_BASIS_VERTICES} "
            f"and max_edges <= {MAX_BASIS_EDGES}"
        )
    if max_edges < 0:
        raise TooLarge("max_edges must be >= 0")
    graphs = []
    for n in range(k, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        labels = tuple(range(k))
        for e in range(max_edges + 1):
            for occ in combinations_with_replacement(slots, e):
                graphs.append(LabeledGraph(Multigraph(n, occ), labels))
    return GraphBasis(k, graphs)


class ConnectionMatrix:
    __slots__ = ("basis", "entries")

    def __init__(self, basis, entries):
        self.basis = basis
        self.entries = tuple(tuple(row) for row in entries)

    @property
    def size(self):
        return len(self.entries)


def connection_matrix_for(f, basis: GraphBasis) -> ConnectionMatrix:
    """Connection matrix of an arbitrary graph parameter f over the basis.

    f takes the glued (unlabeled) multigraph.  Entries are computed once per
    unordered pair and mirrored; gluing is evaluated left-to-right.
    """
    size = len(basis.graphs)
    entries = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            val = f(glue(basis.graphs[i], basis.graphs[j]).graph)
            entries[i][j] = val
            entries[j][i] = val
    return ConnectionMatrix(basis, entries)


def connection_matrix(a: WeightMatrix, basis: GraphBasis, budget=None) -> ConnectionMatrix:
    """Connection matrix of the partition function of a, entries by z_brute."""
    if a.ring is POLY:
        raise RingUnsupported("polynomial-valued connection matrices have no PSD order")
    a.require_symmetric()
    return connection_matrix_for(lambda g: z_brute(a, g, budget=budget), basis)


def is_psd(rows) -> bool:
    """Exact PSD test by pivoted Schur elimination over the rationals.

    PSD iff no step exposes a negative diagonal and every zero-diagonal
    residue is the zero matrix.
    """
    size = len(rows)
    work = [[Fraction(rows[i][j]) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if work[i][j] != work[j][i]:
                raise NotSymmetric("PSD test needs a symmetric matrix")
    live = list(range(size))
    while live:
        if any(work[i][i] < 0 for i in live):
            return False
        pivot = next((i for i in live if work[i][i] > 0), None)
        if pivot is None:
            # all diagonals zero: PSD iff nothing else is nonzero
            return all(work[i][j] == 0 for i in live for j in live)
        p = work[pivot][pivot]
        live.remove(pivot)
        for i in live:
            for j in live:
                work[i][j] -= work[i][pivot] * work[pivot][j] / p
    return True


def rank_bound_check(m: ConnectionMatrix, n: int, k: int) -> bool:
    """Row rank of the connection matrix is at most n^k."""
    if not m.entries:
        return True
    return exact_rank(m.entries) <= n**k


def non_psd_witness(m: ConnectionMatrix):
    """Smallest principal submatrix of m that is not PSD, or None.

    Returns (basis indices, submatrix rows) searching sizes 1, 2, ... so the
    witness is as small as the matrix allows.
    """
    size = m.size
    for r in range(1, size + 1):
        for idx in combinations(range(size), r):
            sub = [[m.entries[i][j] for j in idx] for i in idx]
            if not is_psd(sub):
                return (idx, sub)
    return None


def connection_report(a: WeightMatrix, basis: GraphBasis, budget=None) -> dict:
    """JSON-ready summary: basis, entries, PSD flag, rank and the rank bound."""
    m = connection_matrix(a, basis, budget=budget)
    ring = a.ring if a.ring is RAT else INT
    rank = exact_rank(m.entries) if m.entries else 0
    return {
        "arity": basis.k,
        "basis": [
            {"vertices": lg.graph.n, "edges": [list(e) for e in lg.graph.edges]}
            for lg in basis.graphs
        ],
        "entries": [[ring.to_json(v) for v in row] for row in m.entries],
        "psd": is_psd(m.entries) if m.entries else True,
        "rank": rank,
        "bound": a.n**basis.k,
        "rank-bound-holds": rank <= a.n**basis.k,
    }
