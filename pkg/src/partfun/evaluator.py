"""Brute-force partition-function evaluation, the ground truth of the package.

Z_A(G) sums, over all spin assignments sigma: V -> {0..m-1}, the product of
matrix entries A[sigma(u)][sigma(v)] over edge occurrences.  Variants: pinned
vertices (fixed spins, excluded from vertex weights), diagonal vertex
weights, directed graphs, r-uniform hypergraphs with symmetric weight
tensors, and edge models (weights on the multiset of incident edge colors).

A configuration is a plain tuple of spins indexed by vertex.  Enumeration is
odometer style, vertices ascending and spins ascending, so every run is
deterministic; the enumeration budget caps the number of configurations
(default 10**8, overridable via the PARTFUN_BUDGET environment variable).
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

from .errors import (
    ArityMismatch,
    AsymmetricTensor,
    BadParameter,
    BudgetExceeded,
    DimensionMismatch,
    NotSymmetric,
    PinningConflict,
)
from .graph import DirectedGraph, Hypergraph, Multigraph, Pinning
from .rings import INT, POLY, RAT, Polynomial, Ring

DEFAULT_BUDGET = 10**8


def current_budget() -> int:
    env = os.environ.get("PARTFUN_BUDGET")
    if env is None:
        return DEFAULT_BUDGET
    try:
        value = int(env)
    except ValueError as exc:
        raise BadParameter(f"PARTFUN_BUDGET must be an integer, got {env!r}") from exc
    if value < 1:
        raise BadParameter("PARTFUN_BUDGET must be positive")
    return value


class WeightMatrix:
    """Square matrix of scalars over one ring; symmetric for undirected use."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(ring.coerce(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("weight matrix must be square and nonempty")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("WeightMatrix is immutable")

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return (
            isinstance(other, WeightMatrix)
            and self.ring.name == other.ring.name
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring.name, self.rows))

    def __repr__(self):
        return f"WeightMatrix({self.ring.name}, {[list(r) for r in self.rows]})"

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def require_symmetric(self):
        if not self.is_symmetric():
            raise NotSymmetric("this operation needs a symmetric weight matrix")

    def is_nonneg(self) -> bool:
        return all(self.ring.is_nonneg(v) for row in self.rows for v in row)

    def cast(self, ring: Ring) -> "WeightMatrix":
        """Promote into a larger ring (int -> rat -> poly only)."""
        if not ring.contains(self.ring):
            raise DimensionMismatch(f"cannot demote {self.ring.name} matrix to {ring.name}")
        return WeightMatrix(ring, self.rows)

    def permuted(self, pi) -> "WeightMatrix":
        """Simultaneous row/column permutation; entry (i, j) of the result
        is A[pi[i]][pi[j]]."""
        if sorted(pi) != list(range(self.n)):
            raise BadParameter(f"{pi} is not a permutation of 0..{self.n - 1}")
        return WeightMatrix(self.ring, [[self.rows[pi[i]][pi[j]] for j in range(self.n)] for i in range(self.n)])

    def matmul(self, other: "WeightMatrix") -> "WeightMatrix":
        if self.ring.name != other.ring.name or self.n != other.n:
            raise DimensionMismatch("matrix product needs equal size and ring")
        z = self.ring.zero
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = z
                for k in range(self.n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return WeightMatrix(self.ring, rows)

    def transpose(self) -> "WeightMatrix":
        return WeightMatrix(self.ring, [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)])

    def tensor(self, other: "WeightMatrix") -> "WeightMatrix":
        """Kronecker product, indices ordered (i, k) -> i * other.n + k."""
        if self.ring.name != other.ring.name:
            raise DimensionMismatch("tensor product needs a common ring")
        size = self.n * other.n
        rows = [
            [self.rows[i // other.n][j // other.n] * other.rows[i % other.n][j % other.n] for j in range(size)]
            for i in range(size)
        ]
        return WeightMatrix(self.ring, rows)


class DiagonalWeights:
    __slots__ = ("ring", "n", "diag")

    def __init__(self, ring: Ring, diag):
        diag = tuple(ring.coerce(v) for v in diag)
        if not diag:
            raise DimensionMismatch("diagonal weights must be nonempty")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", len(diag))
        object.__setattr__(self, "diag", diag)

    def __setattr__(self, name, value):
        raise AttributeError("DiagonalWeights is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, DiagonalWeights)
            and self.ring.name == other.ring.name
            and self.diag == other.diag
        )

    def __repr__(self):
        return f"DiagonalWeights({self.ring.name}, {list(self.diag)})"

    def cast(self, ring: Ring) -> "DiagonalWeights":
        if not ring.contains(self.ring):
            raise DimensionMismatch(f"cannot demote {self.ring.name} weights to {ring.name}")
        return DiagonalWeights(ring, self.diag)


class EdgeModel:
    """Weights on the vector t(tau, v) counting incident edge colors.

    The table maps every composition (t_0..t_{n-1}) with sum <= max_degree to
    a scalar; a loop is incident twice, so compositions sum to vertex degree.
    """

    __slots__ = ("ring", "n", "max_degree", "table")

    def __init__(self, ring: Ring, n: int, max_degree: int, fn):
        if n < 1 or max_degree < 0:
            raise BadParameter("edge model needs n >= 1 colors and max_degree >= 0")
        table = {}
        for total in range(max_degree + 1):
            for comp in _compositions(total, n):
                table[comp] = ring.coerce(fn(comp))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeModel is immutable")


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def perfect_matching_model(max_degree: int) -> EdgeModel:
    """Two colors; weight 1 exactly when one incident edge has color 1.

    Summed over edge colorings this counts the perfect matchings (color-1
    edges must cover every vertex exactly once)."""
    return EdgeModel(INT, 2, max_degree, lambda comp: 1 if comp[1] == 1 else 0)


def _check_dims(a: WeightMatrix, g: Multigraph, pin, weights):
    if pin is not None:
        for v, s in pin.items():
            if v >= g.n:
                raise DimensionMismatch(f"pinned vertex {v} outside the graph")
            if s >= a.n:
                raise DimensionMismatch(f"pinned spin {s} outside 0..{a.n - 1}")
    if weights is not None and weights.n != a.n:
        raise DimensionMismatch("diagonal weights size differs from the matrix")


def config_weight(a: WeightMatrix, g: Multigraph, sigma, pin: Pinning | None = None,
                  weights: DiagonalWeights | None = None):
    """Weight of one configuration: edge product times vertex weights.

    Vertex weights are skipped for pinned vertices.  The edge product counts
    multiplicity."""
    _check_dims(a, g, pin, weights)
    sigma = tuple(sigma)
    if len(sigma) != g.n:
        raise DimensionMismatch(f"configuration covers {len(sigma)} of {g.n} vertices")
    if any(not 0 <= s < a.n for s in sigma):
        raise DimensionMismatch("configuration uses a spin outside the matrix")
    if pin is not None:
        for v, s in pin.items():
            if sigma[v] != s:
                raise PinningConflict(f"sigma[{v}] = {sigma[v]} but the pinning demands {s}")
    w = a.ring.one
    rows = a.rows
    for u, v, m in g.edges:
        w = w * rows[sigma[u]][sigma[v]] ** m
        if not w:
            return a.ring.zero
    if weights is not None:
        pinned = pin.assignments if pin is not None else {}
        for v in range(g.n):
            if v not in pinned:
                w = w * weights.diag[sigma[v]]
    return w


def z_brute(a: WeightMatrix, g: Multigraph, pin: Pinning | None = None,
            weights: DiagonalWeights | None = None, budget: int | None = None):
    """Exact partition function by full enumeration.

    Sums the configuration weight over every assignment extending the
    pinning; the empty graph contributes the empty product, so Z = 1.
    """
    a.require_symmetric()
    _check_dims(a, g, pin, weights)
    if budget is None:
        budget = current_budget()
    m = a.n
    pinned = pin.assignments if pin is not None else {}
    free = [v for v in range(g.n) if v not in pinned]
    if m ** len(free) > budget:
        raise BudgetExceeded(f"{m}^{len(free)} configurations exceed the budget {budget}")
    rows = a.rows
    edges = g.edges
    diag = weights.diag if weights is not None else None
    sigma = [0] * g.n
    for v, s in pinned.items():
        sigma[v] = s
    total = a.ring.zero
    for assign in itertools.product(range(m), repeat=len(free)):
        for v, s in zip(free, assign):
            sigma[v] = s
        w = a.ring.one
        for u, v, mult in edges:
            w = w * rows[sigma[u]][sigma[v]] ** mult
            if not w:
                break
        else:
            if diag is not None:
                for v in free:
                    w = w * diag[sigma[v]]
            total = total + w
    return total


def z_directed(a: WeightMatrix, g: DirectedGraph, budget: int | None = None):
    """Partition function of a directed graph; A need not be symmetric."""
    if budget is None:
        budget = current_budget()
    m = a.n
    if m**g.n > budget:
        raise BudgetExceeded(f"{m}^{g.n} configurations exceed the budget {budget}")
    rows = a.rows
    total = a.ring.zero
    for sigma in itertools.product(range(m), repeat=g.n):
        w = a.ring.one
        for u, v, mult in g.edges:
            w = w * rows[sigma[u]][sigma[v]] ** mult
            if not w:
                break
        else:
            total = total + w
    return total


class SymmetricTensor:
    """Total map [n]^r -> scalars, symmetric under coordinate permutation."""

    __slots__ = ("ring", "n", "arity", "table")

    def __init__(self, ring: Ring, n: int, arity: int, table):
        if n < 1 or arity < 1:
            raise BadParameter("tensor needs n >= 1 and arity >= 1")
        full = {}
        for idx in itertools.product(range(n), repeat=arity):
            if idx not in table:
                raise DimensionMismatch(f"tensor table misses index {idx}")
            full[idx] = ring.coerce(table[idx])
        for idx, v in full.items():
            if full[tuple(sorted(idx))] != v:
                raise AsymmetricTensor(f"tensor differs at {idx} and {tuple(sorted(idx))}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "table", full)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricTensor is immutable")

    @classmethod
    def from_matrix(cls, a: WeightMatrix) -> "SymmetricTensor":
        a.require_symmetric()
        return cls(a.ring, a.n, 2, {(i, j): a.rows[i][j] for i in range(a.n) for j in range(a.n)})


def z_hypergraph(t: SymmetricTensor, h: Hypergraph, budget: int | None = None):
    """Partition function of an r-uniform hypergraph."""
    if t.arity != h.arity:
        raise ArityMismatch(f"tensor arity {t.arity} against hypergraph arity {h.arity}")
    if budget is None:
        budget = current_budget()
    if t.n**h.n > budget:
        raise BudgetExceeded(f"{t.n}^{h.n} configurations exceed the budget {budget}")
    total = t.ring.zero
    for sigma in itertools.product(range(t.n), repeat=h.n):
        w = t.ring.one
        for he in h.hyperedges:
            w = w * t.table[tuple(sigma[v] for v in he)]
            if not w:
                break
        else:
            total = total + w
    return total


def z_edge_model(f: EdgeModel, g: Multigraph, budget: int | None = None):
    """Edge-model partition function: sum over edge colorings tau of the
    product over vertices of F(t(tau, v))."""
    if budget is None:
        budget = current_budget()
    occurrences = list(g.edge_occurrences())
    e = len(occurrences)
    if f.n**e > budget:
        raise BudgetExceeded(f"{f.n}^{e} edge colorings exceed the budget {budget}")
    if g.n and max(g.degrees(), default=0) > f.max_degree:
        raise BadParameter("edge-model table does not cover the maximum degree")
    incident = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(occurrences):
        incident[u].append(idx)
        incident[v].append(idx)  # loops are incident twice
    total = f.ring.zero
    for tau in itertools.product(range(f.n), repeat=e):
        w = f.ring.one
        for v in range(g.n):
            counts = [0] * f.n
            for idx in incident[v]:
                counts[tau[idx]] += 1
            w = w * f.table[tuple(counts)]
            if not w:
                break
        else:
            total = total + w
    return total


def scalar_key(v):
    """Deterministic sort key for scalars of one ring."""
    if isinstance(v, Polynomial):
        return (len(v.coeffs), v.coeffs)
    return (0, Fraction(v))


def potential_weights(a: WeightMatrix, g: Multigraph):
    """All products of |E| matrix entries (with repetition), deduplicated.

    Every configuration weight of (A, G) lies in this set; the converse can
    fail, which is fine for the interpolation that consumes it."""
    e = g.num_edges()
    values = sorted(set(v for row in a.rows for v in row), key=scalar_key)
    out = set()
    for combo in itertools.combinations_with_replacement(values, e):
        w = a.ring.one
        for v in combo:
            w = w * v
            if not w:
                break
        out.add(w if w else a.ring.zero)
    return out


def count_configs(a: WeightMatrix, g: Multigraph, w, pin: Pinning | None = None,
                  budget: int | None = None) -> int:
    """Number of configurations extending the pinning with edge product
    exactly w (vertex weights play no role here)."""
    a.require_symmetric()
    _check_dims(a, g, pin, None)
    if budget is None:
        budget = current_budget()
    m = a.n
    pinned = pin.assignments if pin is not None else {}
    free = [v for v in range(g.n) if v not in pinned]
    if m ** len(free) > budget:
        raise BudgetExceeded(f"{m}^{len(free)} configurations exceed the budget {budget}")
    w = a.ring.coerce(w)
    rows = a.rows
    sigma = [0] * g.n
    for v, s in pinned.items():
        sigma[v] = s
    count = 0
    for assign in itertools.product(range(m), repeat=len(free)):
        for v, s in zip(free, assign):
            sigma[v] = s
        acc = a.ring.one
        for u, v, mult in g.edges:
            acc = acc * rows[sigma[u]][sigma[v]] ** mult
            if not acc:
                break
        if acc == w:
            count += 1
    return count
