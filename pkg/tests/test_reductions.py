from fractions import Fraction

import pytest

from partfun.errors import (
    BadParameter,
    DimensionMismatch,
    NotPowerMatrix,
    OracleFailure,
    UnsupportedModulus,
)
from partfun.evaluator import (
    DiagonalWeights,
    WeightMatrix,
    count_configs,
    potential_weights,
    z_brute,
)
from partfun.graph import Multigraph, Pinning, stretch, thicken
from partfun.reductions import (
    matrix_stretch,
    matrix_thicken,
    prime_transform,
    recover_counts,
    rename,
    twin_resolvent,
)
from partfun.rings import INT, POLY, RAT, X

I = WeightMatrix(INT, [[1, 1], [1, 0]])
K2 = Multigraph(2, [(0, 1)])
P3 = Multigraph(3, [(0, 1), (1, 2)])
LOOPY = Multigraph(2, [(0, 1, 2), (0, 0)])


def test_matrix_thicken_matches_graph_thicken():
    a = WeightMatrix(INT, [[1, 2], [2, 3]])
    assert matrix_thicken(a, 3).rows == ((1, 8), (8, 27))
    for p in (1, 2, 3):
        for g in (K2, P3, LOOPY):
            assert z_brute(matrix_thicken(a, p), g) == z_brute(a, thicken(g, p))
    with pytest.raises(BadParameter):
        matrix_thicken(a, 0)


def test_matrix_stretch_matches_graph_stretch():
    a = WeightMatrix(INT, [[1, 2], [2, 3]])
    assert matrix_stretch(a, 2).rows == ((5, 8), (8, 13))
    for p in (1, 2, 3):
        for g in (K2, LOOPY):
            assert z_brute(matrix_stretch(a, p), g) == z_brute(a, stretch(g, p))
    with pytest.raises(BadParameter):
        matrix_stretch(a, 0)


def test_twin_resolvent_groups_equal_rows():
    a = WeightMatrix(INT, [[1, 1, 2], [1, 1, 2], [2, 2, 0]])
    res = twin_resolvent(a)
    assert res.resolvent.rows == ((1, 2), (2, 0))
    assert res.weights.diag == (2, 1)
    assert res.tau == (0, 0, 1)
    # no twins: the resolvent is the matrix itself with unit weights
    plain = twin_resolvent(I)
    assert plain.resolvent == I
    assert plain.weights.diag == (1, 1)


def test_twin_resolution_preserves_z():
    a = WeightMatrix(INT, [[1, 1, 2], [1, 1, 2], [2, 2, 0]])
    res = twin_resolvent(a)
    for g in (K2, P3, LOOPY):
        assert z_brute(a, g) == z_brute(res.resolvent, g, weights=res.weights)
        pin = Pinning({0: 2})
        assert z_brute(a, g, pin=pin) == z_brute(
            res.resolvent, g, pin=res.map_pinning(pin), weights=res.weights
        )


def test_twin_resolvent_sums_existing_weights():
    a = WeightMatrix(INT, [[1, 1], [1, 1]])
    d = DiagonalWeights(INT, [5, 7])
    res = twin_resolvent(a, d)
    assert res.resolvent.rows == ((1,),)
    assert res.weights.diag == (12,)
    with pytest.raises(DimensionMismatch):
        twin_resolvent(a, DiagonalWeights(INT, [1]))


def test_prime_transform_integer_matrix():
    a = WeightMatrix(INT, [[12, 5], [5, -8]])
    assert prime_transform(a, 2, "filter").rows == ((4, 1), (1, 8))
    assert prime_transform(a, 2, "eliminate").rows == ((0, 5), (5, 0))
    assert prime_transform(a, 3, "filter").rows == ((3, 1), (1, 1))
    with pytest.raises(UnsupportedModulus):
        prime_transform(a, 4, "filter")
    with pytest.raises(BadParameter):
        prime_transform(a, 2, "mod-out")


def test_prime_transform_polynomial_matrix():
    a = WeightMatrix(POLY, [[X**2, X + X**2], [X + X**2, POLY.one]])
    assert prime_transform(a, X, "filter").rows == ((X**2, X), (X, POLY.one))
    elim = prime_transform(a, X, "eliminate")
    assert elim.rows == ((POLY.zero, POLY.zero), (POLY.zero, POLY.one))
    with pytest.raises(UnsupportedModulus):
        prime_transform(a, X + 1, "filter")
    with pytest.raises(UnsupportedModulus):
        prime_transform(WeightMatrix(RAT, [[Fraction(1)]]), 2, "filter")


def test_rename_substitutes_into_powers():
    a = WeightMatrix(POLY, [[X**2, POLY.zero], [POLY.zero, X]])
    b = rename(a, X + 1)
    assert b.rows[0][0] == (X + 1) ** 2
    assert b.rows[1][1] == X + 1
    assert not b.rows[0][1]
    with pytest.raises(NotPowerMatrix):
        rename(WeightMatrix(POLY, [[X + 1]]), X)
    with pytest.raises(NotPowerMatrix):
        rename(WeightMatrix(INT, [[1]]), X)


def test_recover_counts_int():
    oracle = lambda phi, h: z_brute(I, h, pin=phi)
    for g in (K2, P3, LOOPY):
        counts = recover_counts(oracle, I, g)
        for w in potential_weights(I, g):
            assert counts[w] == count_configs(I, g, w), (g, w)
        assert sum(counts.values()) == I.n**g.n


def test_recover_counts_with_pinning():
    oracle = lambda phi, h: z_brute(I, h, pin=phi)
    phi = Pinning({0: 1})
    counts = recover_counts(oracle, I, P3, phi=phi)
    for w in potential_weights(I, P3):
        assert counts[w] == count_configs(I, P3, w, pin=phi)
    assert sum(counts.values()) == I.n ** (P3.n - 1)


def test_recover_counts_poly():
    c = WeightMatrix(POLY, [[POLY.one, X], [X, POLY.one]])
    oracle = lambda phi, h: z_brute(c, h, pin=phi)
    for g in (K2, P3):
        counts = recover_counts(oracle, c, g)
        for w in potential_weights(c, g):
            assert counts[w] == count_configs(c, g, w), (g, w)


def test_recover_counts_flags_lying_oracle():
    # more weight-1 configurations than configurations exist
    with pytest.raises(OracleFailure):
        recover_counts(lambda phi, h: 100, I, P3)
    # all-ones matrix: every configuration has weight 1, no zero complement
    ones = WeightMatrix(INT, [[1, 1], [1, 1]])
    with pytest.raises(OracleFailure):
        recover_counts(lambda phi, h: 3, ones, K2)
    # a fractional multiplicity can never be a count
    half = WeightMatrix(RAT, [[Fraction(1, 2), Fraction(1, 2)],
                              [Fraction(1, 2), Fraction(1, 2)]])
    with pytest.raises(OracleFailure):
        recover_counts(lambda phi, h: Fraction(1, 3), half, K2)
