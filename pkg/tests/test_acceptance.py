"""Acceptance gate: ten end-to-end criteria, one test each.

Every test prints a single "criterion NN: PASS/FAIL" line (visible with
pytest -s, and on failure regardless) and asserts the runtime cap the
criterion carries.  Corpora are exhaustive wherever enumeration is cheap
and curated families elsewhere; sizes are pinned so silent shrinkage of
a sweep fails loudly.
"""

import itertools
import time
from contextlib import contextmanager
from fractions import Fraction

from partfun import corpus
from partfun.cli import run as cli_run
from partfun.connection import (
    connection_matrix,
    connection_matrix_for,
    enumerate_klabeled,
    is_psd,
    non_psd_witness,
    rank_bound_check,
)
from partfun.evaluator import (
    DiagonalWeights,
    WeightMatrix,
    count_configs,
    perfect_matching_model,
    potential_weights,
    z_brute,
    z_edge_model,
)
from partfun.fastpath import classify, classify01, underlying_graph, z_fast
from partfun.graph import Multigraph, Pinning, stretch, thicken
from partfun.models import (
    constant_diagonal_matrix,
    even_induced_subgraphs,
    ising_polynomial,
    nowhere_zero_flows,
    ordered_max_cuts,
    potts_partition,
    tutte_contraction_deletion,
    tutte_eval_brute,
    verify_tutte_identity,
)
from partfun.moebius import (
    enumerate_partitions,
    mobius,
    schrijver_condition,
    y_injective,
    zeta_check,
)
from partfun.reductions import (
    matrix_stretch,
    matrix_thicken,
    recover_counts,
    twin_resolvent,
)
from partfun.rings import INT, POLY, RAT, X


@contextmanager
def criterion(num, text, cap=None):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"criterion {num:02d}: FAIL  {text}")
        raise
    elapsed = time.monotonic() - start
    print(f"criterion {num:02d}: PASS  {text}  ({elapsed:.1f}s)")
    if cap is not None:
        assert elapsed < cap, f"criterion {num} took {elapsed:.1f}s, cap {cap}s"


def test_criterion_01_fast_brute_equivalence():
    with criterion(1, "z_fast = z_brute on every tractable nonnegative matrix", cap=60):
        mats = corpus.tractable_nonneg_matrices(3, 3)
        graphs = corpus.connected_multigraphs(4, 6) + corpus.curated_multigraphs(6, 8)
        assert len(mats) == 192
        assert len(graphs) == 283 + 9
        assert max(g.n for g in graphs) == 6
        assert max(g.num_edges() for g in graphs) == 8
        for a in mats:
            cls = classify(a)
            assert cls.is_tractable
            for g in graphs:
                assert z_fast(a, g, cls) == z_brute(a, g), (a, g)


def test_criterion_02_dichotomy_consistency_on_01_matrices():
    with criterion(2, "classify agrees with classify01 on all symmetric 0-1 matrices", cap=10):
        mats = corpus.symmetric01_matrices()
        assert len(mats) == 1098
        assert sum(1 for a in mats if a.n == 4) == 1024
        for a in mats:
            assert classify(a).verdict == classify01(underlying_graph(a)).verdict, a


def test_criterion_03_worked_values_and_small_identities():
    with criterion(3, "hand-checked values, even-subgraph and max-cut identities"):
        I = WeightMatrix(INT, [[1, 1], [1, 0]])
        K3 = WeightMatrix(INT, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        U = WeightMatrix(INT, [[1, -1], [-1, 1]])
        B = WeightMatrix(INT, [[1, 1], [1, -1]])
        C = WeightMatrix(POLY, [[POLY.one, X], [X, POLY.one]])
        p3 = corpus.path_graph(3)
        k2 = corpus.complete_graph(2)
        c3 = corpus.cycle_graph(3)

        assert z_brute(I, p3) == 5
        assert z_brute(K3, c3) == 6
        assert z_brute(U, c3) == 8
        assert z_brute(U, k2) == 0
        assert z_brute(B, k2) == 2
        assert z_brute(C, k2) == 2 * X + POLY.coerce(2)

        for g in corpus.simple_graphs_upto(5):
            # signed sum = evens minus odds, so evens = Z/2 + 2^(N-1)
            assert Fraction(z_brute(B, g), 2) + Fraction(2) ** (g.n - 1) \
                == even_induced_subgraphs(g)
            if g.num_edges() >= 1:
                zp = z_brute(C, g)
                weight, count = ordered_max_cuts(g)
                assert zp.degree == weight, g
                assert zp.leading() == count, g


def test_criterion_04_tutte_identity_and_contraction_deletion():
    with criterion(4, "Tutte identity at four points plus contraction-deletion", cap=120):
        graphs = corpus.connected_multigraphs(4, 7) + corpus.curated_multigraphs(5, 7)
        assert len(graphs) == 668 + 9
        assert max(g.n for g in graphs) == 5
        assert max(g.num_edges() for g in graphs) == 7
        points = [(2, 2), (3, 2), (2, 3), (5, 2)]
        for g in graphs:
            for x, y in points:
                x, y = Fraction(x), Fraction(y)
                assert verify_tutte_identity(g, x, y), (g, x, y)
                assert tutte_contraction_deletion(g, x, y) == tutte_eval_brute(g, x, y)


def test_criterion_05_flow_count_three_ways():
    with criterion(5, "flow counts: direct = scaled Z = vertex-weighted Z"):
        for k in (2, 3):
            a = constant_diagonal_matrix(k, k - 1, -1)
            d = DiagonalWeights(RAT, [Fraction(1, k)] * k)
            for g in corpus.simple_graphs_upto(5):
                direct = nowhere_zero_flows(g, k)
                scaled = Fraction(1, k) ** g.n * z_brute(a, g)
                weighted = z_brute(a, g, weights=d)
                assert direct == scaled == weighted, (k, g)


def test_criterion_06_potts_and_ising():
    with criterion(6, "Potts partition matches Z and Ising specializes to Potts"):
        graphs = list(corpus.simple_graphs_upto(4))
        for n in (1, 2, 3):
            for v in (Fraction(0), Fraction(1), Fraction(-1, 2)):
                a = constant_diagonal_matrix(n, 1 + v, 1)
                for g in graphs:
                    assert potts_partition(g, n, v) == z_brute(a, g), (n, v, g)
        for v in (Fraction(0), Fraction(1), Fraction(-1, 2)):
            for g in graphs:
                assert ising_polynomial(g).eval(1 + v) == potts_partition(g, 2, v)


def _refinements(p):
    # coarse partition -> all partitions refining it, blockwise
    per_block = []
    for b in p.blocks:
        b = sorted(b)
        opts = []
        for q in enumerate_partitions(len(b)):
            opts.append([frozenset(b[i] for i in blk) for blk in q.blocks])
        per_block.append(opts)
    for combo in itertools.product(*per_block):
        yield frozenset(blk for part in combo for blk in part)


def test_criterion_07_moebius_suite():
    with criterion(7, "Moebius recursion, falling factorial, injective sums, zeta", cap=120):
        for k in range(9):
            table = mobius(k)
            # falling factorial: sum of mu(P) X^|P| over all partitions
            total = POLY.zero
            for p, mu in table.items():
                total = total + POLY.coerce(mu) * X ** len(p.blocks)
            ff = POLY.one
            for i in range(k):
                ff = ff * (X - POLY.coerce(i))
            assert total == ff, k
            # defining recursion: mu sums to zero below any non-discrete P
            mu_of = {frozenset(frozenset(b) for b in p.blocks): m
                     for p, m in table.items()}
            for p in enumerate_partitions(k):
                s = sum(mu_of[q] for q in _refinements(p))
                discrete = all(len(b) == 1 for b in p.blocks)
                assert s == (1 if discrete else 0), (k, p)

        mats = [(name, a) for name, a in corpus.int_matrix_corpus() if a.n <= 3]
        for name, a in mats:
            for g in corpus.simple_graphs_upto(5):
                assert y_injective(a, g, mode="brute") \
                    == y_injective(a, g, mode="inversion"), (name, g)
                lhs, rhs = zeta_check(a, g)
                assert lhs == rhs, (name, g)
                if g.n > a.n:
                    assert schrijver_condition(a, g) == a.ring.zero, (name, g)


def test_criterion_08_connection_matrices():
    with criterion(8, "connection matrices PSD with rank <= n^k; matching witness", cap=180):
        mats = [(name, a) for name, a in corpus.nonneg_int_corpus() if a.n <= 3]
        assert len(mats) == 8
        for k in (0, 1, 2):
            basis = enumerate_klabeled(k, 3, 3)
            assert len(basis.graphs) > 100
            for name, a in mats:
                m = connection_matrix(a, basis, budget=10**9)
                assert is_psd(m.entries), (k, name)
                assert rank_bound_check(m, a.n, k), (k, name)
        # thinner 4-vertex basis at the largest spin count
        spot = enumerate_klabeled(2, 4, 2)
        a3 = dict(mats)["three-colorings"]
        m = connection_matrix(a3, spot, budget=10**9)
        assert is_psd(m.entries)
        assert rank_bound_check(m, 3, 2)
        # perfect matchings: some principal submatrix at k=1 is not PSD
        basis = enumerate_klabeled(1, 2, 1)
        model = perfect_matching_model(8)
        m = connection_matrix_for(lambda g: z_edge_model(model, g), basis)
        assert non_psd_witness(m) is not None


def test_criterion_09_reduction_identities():
    with criterion(9, "thickening, stretching, twins, permutations, count recovery", cap=120):
        graphs = list(corpus.simple_graphs_upto(4)) + list(corpus.connected_multigraphs(4, 4))
        int_mats = [(name, a) for name, a in corpus.int_matrix_corpus() if a.n <= 3]

        for p in (1, 2, 3):
            for name, a in int_mats:
                for g in graphs:
                    assert z_brute(matrix_thicken(a, p), g) \
                        == z_brute(a, thicken(g, p)), (p, name, g)

        for p in (2, 3):
            for name, a in int_mats:
                for g in graphs:
                    h = stretch(g, p)
                    if a.n ** h.n > 3**9:
                        continue
                    assert z_brute(matrix_stretch(a, p), g) == z_brute(a, h), (p, name, g)

        twinned = [
            WeightMatrix(INT, [[1, 1, 2], [1, 1, 2], [2, 2, 0]]),
            WeightMatrix(INT, [[3, 3], [3, 3]]),
            WeightMatrix(INT, [[0, 1, 0], [1, 1, 1], [0, 1, 0]]),
        ]
        for a in twinned:
            res = twin_resolvent(a)
            for g in graphs:
                assert z_brute(a, g) == z_brute(res.resolvent, g, weights=res.weights)
                if g.n:
                    pin = Pinning({0: a.n - 1})
                    assert z_brute(a, g, pin) == z_brute(
                        res.resolvent, g, res.map_pinning(pin), weights=res.weights)

        for name, a in int_mats[:4]:
            for perm in itertools.permutations(range(a.n)):
                b = a.permuted(perm)
                for g in graphs[:30]:
                    assert z_brute(a, g) == z_brute(b, g), (name, perm, g)

        mats = int_mats[:4] + [(n, a) for n, a in corpus.poly_matrix_corpus()[:2]]
        for name, a in mats:
            for g in graphs[:24]:
                counts = recover_counts(lambda phi, h: z_brute(a, h, phi), a, g)
                for w in potential_weights(a, g):
                    assert counts[w] == count_configs(a, g, w), (name, w, g)
                if g.n:
                    pin = Pinning({0: 0})
                    counts = recover_counts(lambda phi, h: z_brute(a, h, phi), a, g, pin)
                    for w in potential_weights(a, g):
                        assert counts[w] == count_configs(a, g, w, pin), (name, w, g)


def test_criterion_10_full_verify_run(capsys):
    with criterion(10, "verify --suite all --max-vertices 4 exits 0", cap=300):
        rc = cli_run(["verify", "--suite", "all", "--max-vertices", "4"])
        out = capsys.readouterr().out
        assert rc == 0, out
        assert '"passed":true' in out
