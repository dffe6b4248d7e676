from fractions import Fraction

import pytest

from partfun.connection import (
    GraphBasis,
    connection_matrix,
    connection_matrix_for,
    connection_report,
    enumerate_klabeled,
    is_psd,
    non_psd_witness,
    rank_bound_check,
)
from partfun.errors import LabelMismatch, NotSymmetric, RingUnsupported, TooLarge
from partfun.evaluator import WeightMatrix, perfect_matching_model, z_brute, z_edge_model
from partfun.graph import LabeledGraph, Multigraph
from partfun.rings import INT, POLY, X

I = WeightMatrix(INT, [[1, 1], [1, 0]])


def test_enumerate_klabeled_sizes():
    # n = 1: 0, 1 or 2 loops on one vertex
    basis = enumerate_klabeled(1, 1, 2)
    assert len(basis) == 3
    # n up to 2 adds the 1+3+6 multisets over the three slots
    assert len(enumerate_klabeled(1, 2, 2)) == 13
    assert all(lg.k == 1 for lg in basis)
    # the empty graph is the sole 0-labeled basis element on 0 vertices
    assert len(enumerate_klabeled(0, 0, 3)) == 1


def test_enumerate_klabeled_guards():
    with pytest.raises(TooLarge):
        enumerate_klabeled(3, 2, 2)
    with pytest.raises(TooLarge):
        enumerate_klabeled(1, 7, 2)
    with pytest.raises(TooLarge):
        enumerate_klabeled(1, 3, 9)
    with pytest.raises(TooLarge):
        enumerate_klabeled(-1, 3, 3)


def test_basis_arity_is_checked():
    one = LabeledGraph(Multigraph(1), (0,))
    with pytest.raises(LabelMismatch):
        GraphBasis(2, [one])


def test_connection_entries_are_glued_values():
    k1 = LabeledGraph(Multigraph(1), (0,))
    k2 = LabeledGraph(Multigraph(2, [(0, 1)]), (0,))
    m = connection_matrix(I, GraphBasis(1, [k1, k2]))
    # glue(k1,k1) is a point, glue(k1,k2) an edge, glue(k2,k2) a 2-path
    assert m.entries == ((2, 3), (3, 5))
    assert m.size == 2


def test_connection_matrix_rejects_polynomials():
    c = WeightMatrix(POLY, [[POLY.one, X], [X, POLY.one]])
    with pytest.raises(RingUnsupported):
        connection_matrix(c, enumerate_klabeled(0, 1, 1))


def test_connection_matrix_requires_symmetry():
    asym = WeightMatrix(INT, [[0, 1], [2, 0]])
    with pytest.raises(NotSymmetric):
        connection_matrix(asym, enumerate_klabeled(0, 1, 1))


def test_is_psd():
    assert is_psd([[2, 1], [1, 2]])
    assert is_psd([[0, 0], [0, 0]])
    assert is_psd([[1, 1], [1, 1]])
    assert not is_psd([[0, 1], [1, 0]])
    assert not is_psd([[-1]])
    # singular-but-psd needs the zero-row escape
    assert is_psd([[1, 2], [2, 4]])
    assert not is_psd([[1, 2], [2, 3]])
    assert is_psd([[Fraction(1, 2), 0], [0, Fraction(3)]])
    with pytest.raises(NotSymmetric):
        is_psd([[0, 1], [2, 0]])


def test_partition_connection_matrices_are_psd_with_rank_bound():
    for k in (0, 1):
        basis = enumerate_klabeled(k, 2, 2)
        m = connection_matrix(I, basis)
        assert is_psd(m.entries)
        assert rank_bound_check(m, I.n, k)


def test_matching_matrix_has_non_psd_witness():
    basis = enumerate_klabeled(1, 2, 1)
    model = perfect_matching_model(6)
    m = connection_matrix_for(lambda g: z_edge_model(model, g), basis)
    found = non_psd_witness(m)
    assert found is not None
    idx, sub = found
    assert not is_psd(sub)
    assert len(idx) == len(sub)
    # a PSD matrix yields no witness
    assert non_psd_witness(connection_matrix(I, basis)) is None


def test_connection_report_shape():
    report = connection_report(I, enumerate_klabeled(1, 2, 1))
    assert report["arity"] == 1
    assert report["psd"] is True
    assert report["rank"] <= report["bound"] == 2
    assert report["rank-bound-holds"] is True
    assert len(report["basis"]) == len(report["entries"])
    assert all(isinstance(v, str) for row in report["entries"] for v in row)
