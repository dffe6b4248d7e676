"""Partition-lattice algebra: enumerating partitions of a vertex set, the
Moebius function of the refinement order, and the injective partition
functions built from it.

The refinement order is fixed as P <= Q iff P refines Q, so the finest
partition (all singletons) is the bottom of the lattice and the one-block
partition is the top.  mu is the unique integer function with
sum_{Q <= P} mu(Q) = 1 when P is all-singletons and 0 otherwise.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial

from .errors import BadParameter, BudgetExceeded, TooLarge
from .evaluator import WeightMatrix, config_weight, current_budget, z_brute
from .graph import Multigraph, VertexPartition, quotient

# Bell numbers explode; partitions are only ever enumerated up to this size.
BELL_GUARD = 12


def enumerate_partitions(k: int):
    """All partitions of {0..k-1} as restricted-growth strings, lexicographic."""
    if k < 0:
        raise BadParameter("ground set size must be >= 0")
    if k > BELL_GUARD:
        raise TooLarge(f"refusing to enumerate partitions of {k} > {BELL_GUARD} elements")
    if k == 0:
        return [VertexPartition(0, [])]
    out = []
    rgs = [0] * k

    def extend(i, top):
        if i == k:
            out.append(VertexPartition.from_rgs(rgs))
            return
        for b in range(top + 2):
            rgs[i] = b
            extend(i + 1, max(top, b))

    extend(1, 0)
    return out


# mu of a one-block partition depends only on the block size; solved bottom-up
# from the defining equation, summing over partition shapes rather than
# partitions (the number of partitions of [s] with m_i blocks of size i is
# s! / prod(i!^m_i * m_i!)).
_MU_ONE_BLOCK = {1: 1}


def _shapes(s, largest=None):
    """Integer partitions of s as non-increasing tuples."""
    if largest is None:
        largest = s
    if s == 0:
        yield ()
        return
    for first in range(min(s, largest), 0, -1):
        for rest in _shapes(s - first, first):
            yield (first,) + rest


def _shape_count(s, shape):
    mult = {}
    for part in shape:
        mult[part] = mult.get(part, 0) + 1
    count = factorial(s)
    for part, m in mult.items():
        count //= factorial(part) ** m * factorial(m)
    return count


def _mu_one_block(s: int) -> int:
    for t in range(2, s + 1):
        if t in _MU_ONE_BLOCK:
            continue
        total = 0
        for shape in _shapes(t):
            if shape == (t,):
                continue
            term = _shape_count(t, shape)
            for part in shape:
                term *= _MU_ONE_BLOCK[part]
            total += term
        _MU_ONE_BLOCK[t] = -total
    return _MU_ONE_BLOCK[s]


class MobiusTable:
    """mu(P) for every partition P of a fixed ground set."""

    __slots__ = ("k", "table")

    def __init__(self, k, table):
        self.k = k
        self.table = dict(table)

    def __getitem__(self, p: VertexPartition) -> int:
        return self.table[p]

    def __len__(self):
        return len(self.table)

    def items(self):
        return self.table.items()


def mobius(k: int) -> MobiusTable:
    """Moebius table for partitions of {0..k-1}; mu multiplies over blocks."""
    table = {}
    for p in enumerate_partitions(k):
        mu = 1
        for b in p.blocks:
            mu *= _mu_one_block(len(b))
        table[p] = mu
    return MobiusTable(k, table)


def y_injective(a: WeightMatrix, g: Multigraph, mode: str = "brute", budget: int | None = None):
    """Partition function restricted to injective spin assignments.

    mode "brute" sums the edge products over all injective maps V -> spins
    (zero when |V| exceeds the spin count); mode "inversion" computes the
    Moebius-weighted sum of ordinary partition functions over quotients.
    """
    a.require_symmetric()
    ring = a.ring
    if mode == "brute":
        if budget is None:
            budget = current_budget()
        count = 1
        for i in range(g.n):
            count *= max(a.n - i, 0)
        if count > budget:
            raise BudgetExceeded(f"{count} injective maps exceed budget {budget}")
        total = ring.zero
        for tau in permutations(range(a.n), g.n):
            total = total + config_weight(a, g, tau)
        return total
    if mode == "inversion":
        if g.n > BELL_GUARD:
            raise TooLarge(f"inversion needs |V| <= {BELL_GUARD}, got {g.n}")
        table = mobius(g.n)
        total = ring.zero
        for p, mu in table.items():
            total = total + ring.coerce(mu) * z_brute(a, quotient(g, p), budget=budget)
        return total
    raise BadParameter(f"unknown mode {mode!r}, expected 'brute' or 'inversion'")


def zeta_check(a: WeightMatrix, g: Multigraph):
    """(Z_A(G), sum over partitions P of Y_A(G/P)); the two must agree."""
    if g.n > BELL_GUARD:
        raise TooLarge(f"zeta sum needs |V| <= {BELL_GUARD}, got {g.n}")
    lhs = z_brute(a, g)
    rhs = a.ring.zero
    for p in enumerate_partitions(g.n):
        q = quotient(g, p)
        if q.n > a.n:
            # no injective map into the spin set
            continue
        rhs = rhs + y_injective(a, q, mode="inversion")
    return (lhs, rhs)


def schrijver_condition(a: WeightMatrix, g: Multigraph):
    """sum_P mu(P) Z_A(G/P); vanishes whenever |V(G)| exceeds the spin count."""
    if g.n > BELL_GUARD:
        raise TooLarge(f"condition sum needs |V| <= {BELL_GUARD}, got {g.n}")
    return y_injective(a, g, mode="inversion")
