"""Matrix and graph transformations that preserve partition-function values.

Entrywise powering of the matrix matches thickening the graph; ordinary
matrix powering matches stretching.  Twin resolution collapses equal rows
into classes with summed vertex weights.  Prime filtering and elimination
reshape entries through a prime (or the monomial X), and renaming
substitutes a polynomial for X in power-of-X matrices.  recover_counts
inverts a Vandermonde system of evaluation-oracle answers on thickened
graphs to recover how many configurations take each weight.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import (
    BadParameter,
    DegeneratePoint,
    DimensionMismatch,
    NotPowerMatrix,
    OracleFailure,
    UnsupportedModulus,
)
from .evaluator import DiagonalWeights, WeightMatrix, potential_weights, scalar_key
from .graph import Multigraph, Pinning, thicken
from .rings import INT, POLY, Polynomial, X, vandermonde_solve


def matrix_thicken(a: WeightMatrix, p: int) -> WeightMatrix:
    """Entrywise p-th power; pairs with thicken(G, p)."""
    if not isinstance(p, int) or p < 1:
        raise BadParameter("thickening needs an integer p >= 1")
    return WeightMatrix(a.ring, [[v**p for v in row] for row in a.rows])


def matrix_stretch(a: WeightMatrix, p: int) -> WeightMatrix:
    """Ordinary matrix power A^p; pairs with stretch(G, p)."""
    if not isinstance(p, int) or p < 1:
        raise BadParameter("stretching needs an integer p >= 1")
    out = a
    for _ in range(p - 1):
        out = out.matmul(a)
    return out


class TwinResolution:
    """Quotient of a matrix by its equal-row classes.

    tau maps original indices to class indices; the resolvent has one
    row/column per class and the weights sum the original vertex weights
    over each class.
    """

    __slots__ = ("resolvent", "weights", "tau")

    def __init__(self, resolvent, weights, tau):
        self.resolvent = resolvent
        self.weights = weights
        self.tau = tuple(tau)

    def map_pinning(self, pin: Pinning) -> Pinning:
        """Push a pinning through tau (spins become class indices)."""
        return Pinning({v: self.tau[s] for v, s in pin.items()})


def twin_resolvent(a: WeightMatrix, d: DiagonalWeights | None = None) -> TwinResolution:
    """Group equal rows (first-occurrence order) and sum their weights."""
    a.require_symmetric()
    if d is not None and d.n != a.n:
        raise DimensionMismatch("vertex weights size differs from the matrix")
    reps = []
    tau = []
    for i in range(a.n):
        for ci, r in enumerate(reps):
            if a.rows[i] == a.rows[r]:
                tau.append(ci)
                break
        else:
            tau.append(len(reps))
            reps.append(i)
    resolvent = WeightMatrix(a.ring, [[a.rows[ri][rj] for rj in reps] for ri in reps])
    wring = d.ring if d is not None else a.ring
    sums = []
    for ci in range(len(reps)):
        acc = wring.zero
        for i in range(a.n):
            if tau[i] == ci:
                acc = acc + (d.diag[i] if d is not None else wring.one)
        sums.append(acc)
    return TwinResolution(resolvent, DiagonalWeights(wring, sums), tau)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_transform(a: WeightMatrix, p, mode: str) -> WeightMatrix:
    """Filter keeps only the p-part of each entry; eliminate zeroes
    entries divisible by p.  p is a prime integer, or X for polynomials."""
    if mode not in ("filter", "eliminate"):
        raise BadParameter(f"mode must be 'filter' or 'eliminate', got {mode!r}")
    if a.ring is INT:
        if not isinstance(p, int) or not _is_prime(p):
            raise UnsupportedModulus(f"{p!r} is not a prime integer")

        def transform(v):
            if v == 0:
                return 0
            if mode == "eliminate":
                return 0 if v % p == 0 else v
            part = 1
            while v % p == 0:
                v //= p
                part *= p
            return part

    elif a.ring is POLY:
        if not isinstance(p, Polynomial) or p != X:
            raise UnsupportedModulus("polynomial matrices support only the modulus X")

        def transform(v):
            if not v:
                return POLY.zero
            k = v.x_valuation()
            if mode == "eliminate":
                return POLY.zero if k >= 1 else v
            return X**k

    else:
        raise UnsupportedModulus("prime transforms need an int or polynomial matrix")
    return WeightMatrix(a.ring, [[transform(v) for v in row] for row in a.rows])


def rename(a: WeightMatrix, q) -> WeightMatrix:
    """Substitute q for X entrywise in a matrix whose nonzero entries are
    powers of X (zeros stay zero)."""
    if a.ring is not POLY:
        raise NotPowerMatrix("renaming needs a polynomial matrix")
    q = POLY.coerce(q)
    rows = []
    for row in a.rows:
        out = []
        for v in row:
            if not v:
                out.append(POLY.zero)
                continue
            k = v.x_valuation()
            if v != X**k:
                raise NotPowerMatrix(f"entry {v!r} is not a power of X")
            out.append(q**k)
        rows.append(out)
    return WeightMatrix(POLY, rows)


def _separating_point(polys):
    """Smallest integer a >= 1 where the given nonzero polynomials evaluate
    to pairwise distinct nonzero rationals; bounded by the pair-count times
    one plus the maximum degree (existence is guaranteed)."""
    delta = 1 + max(p.degree for p in polys)
    bound = comb(len(polys) + 1, 2) * delta
    for a in range(1, bound + 1):
        vals = [p.eval(a) for p in polys]
        if all(vals) and len(set(vals)) == len(vals):
            return a
    raise DegeneratePoint(f"no separating integer point up to {bound}")


def recover_counts(z_oracle, a: WeightMatrix, g: Multigraph, phi: Pinning | None = None):
    """Recover N(w) = #{configurations extending phi with edge product w}
    for every potential weight w, from oracle answers on thickened graphs.

    The oracle is called as z_oracle(phi, thicken(g, t)) for t = 1, 2, ...;
    its answers satisfy Z_t = sum_w N(w) w^t, a Vandermonde system over the
    nonzero weights (zero-weight configurations drop out of every Z_t and
    are recovered by complement).  Polynomial weights are separated by
    evaluating everything at one well-chosen integer point.
    """
    a.require_symmetric()
    if phi is None:
        phi = Pinning()
    weights = sorted(potential_weights(a, g), key=scalar_key)
    nonzero = [w for w in weights if w]
    total = a.n ** (g.n - len(phi))
    counts = {}
    if nonzero:
        answers = [z_oracle(phi, thicken(g, t)) for t in range(1, len(nonzero) + 1)]
        if a.ring is POLY:
            point = _separating_point(nonzero)
            xs = [w.eval(point) for w in nonzero]
            bs = [POLY.coerce(z).eval(point) for z in answers]
        else:
            xs = nonzero
            bs = answers
        solved = vandermonde_solve(xs, bs)
        for w, c in zip(nonzero, solved):
            if c.denominator != 1 or c < 0:
                raise OracleFailure(f"weight {w!r} got a non-count multiplicity {c}")
            counts[w] = int(c)
    recovered = sum(counts.values())
    if len(nonzero) < len(weights):
        # zero is a potential weight: its count is the complement
        if recovered > total:
            raise OracleFailure(f"nonzero-weight counts sum to {recovered} > {total}")
        counts[a.ring.zero] = total - recovered
    elif recovered != total:
        raise OracleFailure(
            f"counts sum to {recovered} but there are {total} configurations"
        )
    return counts
