import random

import pytest

from bchrom.errors import KOutOfRange, NotATree
from bchrom.graph import Graph, cycle_graph, path_graph, star_graph
from bchrom.matching import is_strongly_maximal, s1_s2
from bchrom.oracle import oracle_f_t_k, oracle_min_smm
from bchrom.tree_dp import (
    INF,
    combine_all,
    combine_one_distinguished,
    deficiency_matching,
    deficiency_tables,
    deficiency_vector,
    dump_deficiency_tables,
    dump_smm_tables,
    f_tree_k,
    min_smm_forest,
    min_smm_tree,
    minplus_convolve,
    reconstruct_deficiency_matching,
    smm_tables,
)

from conftest import tree_catalog


def test_min_smm_examples():
    assert min_smm_tree(path_graph(6)) == (2, frozenset({(1, 2), (3, 4)}))
    size, m = min_smm_tree(path_graph(5))
    assert size == 2 and is_strongly_maximal(path_graph(5), m)
    assert min_smm_tree(path_graph(2)) == (1, frozenset({(0, 1)}))
    assert min_smm_tree(path_graph(1)) == (0, frozenset())


def test_min_smm_star_covers_center():
    star = star_graph(3)
    size, m = min_smm_tree(star)
    assert size == 1
    assert any(0 in e for e in m)
    assert is_strongly_maximal(star, m)


def test_min_smm_rejects_non_trees():
    with pytest.raises(NotATree):
        min_smm_tree(cycle_graph(4))
    with pytest.raises(NotATree):
        min_smm_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_f_tree_k_examples():
    p6 = path_graph(6)
    assert f_tree_k(p6, 2) == 0
    assert f_tree_k(p6, 1) == 4
    assert f_tree_k(p6, 0) == 6
    assert f_tree_k(p6, 3) == 0
    with pytest.raises(KOutOfRange):
        f_tree_k(p6, 4)


def test_f_tree_k_infinity_beyond_nu():
    star = star_graph(4)  # 5 vertices, maximum matching 1
    assert f_tree_k(star, 2) == INF


def test_minplus_combine_examples():
    assert combine_all([[0, 5]])[1] == 5
    assert combine_all([[0, 1], [0, 2]])[1] == 1
    assert combine_all([]) == [0]
    assert minplus_convolve([0, 1], [0, 2], cap=1) == [0, 1]


def test_combine_all_matches_exhaustive():
    rng = random.Random(9)
    for _ in range(60):
        l = rng.randint(1, 4)
        kmax = rng.randint(1, 6)
        children = [
            [rng.choice([INF] + list(range(8))) for _ in range(rng.randint(1, kmax + 1))]
            for _ in range(l)
        ]
        got = combine_all(children, kmax)
        for k in range(len(got)):
            best = INF

            def rec(i, rem, acc):
                nonlocal best
                if acc == INF:
                    return
                if i == l:
                    if rem == 0:
                        best = min(best, acc)
                    return
                for ki, cost in enumerate(children[i]):
                    if ki <= rem:
                        rec(i + 1, rem - ki, acc + cost)

            rec(0, k, 0)
            assert got[k] == best


def test_combine_one_distinguished_matches_exhaustive():
    rng = random.Random(10)
    for _ in range(60):
        l = rng.randint(1, 4)
        kmax = rng.randint(1, 5)
        dists = [
            [rng.choice([INF, 0, 1, 2, 5]) for _ in range(rng.randint(1, kmax + 1))]
            for _ in range(l)
        ]
        rests = [
            [rng.choice([INF, 0, 1, 3]) for _ in range(len(d))] for d in dists
        ]
        got = combine_one_distinguished(dists, rests, kmax)
        for k in range(len(got)):
            best = INF
            for di in range(l):
                seq = rests[:di] + [dists[di]] + rests[di + 1 :]
                ref = combine_all(seq, kmax)
                if k < len(ref):
                    best = min(best, ref[k])
            assert got[k] == best


def test_min_smm_against_oracle_catalog():
    for t in tree_catalog(10, extra_random=160, seed=77):
        size, witness = min_smm_tree(t)
        want, _ = oracle_min_smm(t)
        assert size == want, f"tree {t.edges}"
        assert len(witness) == size
        assert is_strongly_maximal(t, witness)


def test_deficiency_against_oracle_catalog():
    for t in tree_catalog(9, extra_random=80, seed=78):
        vec = deficiency_vector(t)
        for k in range(t.n // 2 + 1):
            assert vec[k] == oracle_f_t_k(t, k), f"tree {t.edges} k={k}"


def test_deficiency_witness_matches_value():
    rng = random.Random(12)
    for t in tree_catalog(9, extra_random=60, seed=79):
        vec = deficiency_vector(t)
        for k in range(t.n // 2 + 1):
            if vec[k] == INF:
                continue
            val, m = deficiency_matching(t, k)
            assert len(m) == k
            assert sum(s1_s2(t, m)) == val == vec[k]


def test_two_dps_agree_on_zero_set():
    for t in tree_catalog(10, extra_random=60, seed=80):
        size, _ = min_smm_tree(t)
        vec = deficiency_vector(t)
        zeros = [k for k, v in enumerate(vec) if v == 0]
        assert min(zeros) == size
        nu = max(k for k, v in enumerate(vec) if v != INF)
        assert vec[nu] == 0  # a maximum matching is strongly maximal


def test_rooting_invariance():
    # the DP value must not depend on which leaf becomes the root
    rng = random.Random(13)
    for t in tree_catalog(9, extra_random=40, seed=81):
        base, _ = min_smm_tree(t)
        leaves = [v for v in range(t.n) if t.degree(v) == 1]
        for leaf in leaves:
            relabel = {leaf: 0, 0: leaf}
            perm = [relabel.get(v, v) for v in range(t.n)]
            g2 = Graph.from_edges(t.n, [(perm[u], perm[v]) for u, v in t.edges])
            size2, _ = min_smm_tree(g2)
            assert size2 == base


def test_min_smm_forest_sums_components():
    f = Graph.from_edges(9, [(0, 1), (1, 2), (3, 4), (5, 6), (6, 7), (7, 8)])
    size, m = min_smm_forest(f)
    assert size == 1 + 1 + 2  # P3, single edge, P4
    assert is_strongly_maximal(f, m)
    with pytest.raises(NotATree):
        min_smm_forest(cycle_graph(3))


def test_dumps_have_expected_shape():
    t = path_graph(4)
    smm_rows = dump_smm_tables(smm_tables(t)).splitlines()
    assert len(smm_rows) == 3 * 5
    assert all(len(r.split("\t")) == 4 for r in smm_rows)
    def_rows = dump_deficiency_tables(deficiency_tables(t)).splitlines()
    assert all(len(r.split("\t")) == 4 for r in def_rows)
    assert any(r.split("\t")[3] == "INF" for r in def_rows)


def test_reconstruct_deficiency_spec_examples():
    p6 = path_graph(6)
    tabs = deficiency_tables(p6)
    m1 = reconstruct_deficiency_matching(tabs, 1)
    assert sum(s1_s2(p6, m1)) == 4
    m3 = reconstruct_deficiency_matching(tabs, 3)
    assert m3 == frozenset({(0, 1), (2, 3), (4, 5)})
    m2 = reconstruct_deficiency_matching(tabs, 2)
    assert sum(s1_s2(p6, m2)) == 0
