import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bchrom.errors import NotTreeCograph, RangeError, StabilityTooLarge
from bchrom.graph import (
    CoTreeLeaf,
    Graph,
    TcJoin,
    TcUnion,
    TreeLeaf,
    chromatic_stability2,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    decompose_tree_cograph,
    empty_graph,
    evaluate_tc,
    graph_join,
    graph_union,
    is_tree,
    is_triangle_free,
    m_degree_bound,
    m_i_count,
    path_graph,
    stability_at_most_two,
    star_graph,
)
from bchrom.oracle import oracle_chi_b, oracle_chromatic

from conftest import all_graphs, random_graph_corpus


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(empty_graph(1)) == empty_graph(1)
    p4 = path_graph(4)
    assert set(complement(p4).edges) == {(0, 2), (0, 3), (1, 3)}


@settings(max_examples=60)
@given(st.integers(1, 8), st.randoms(use_true_random=False))
def test_complement_involution(n, rnd):
    g = Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5]
    )
    assert complement(complement(g)) == g


def test_triangle_free_examples():
    assert is_triangle_free(cycle_graph(5))
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(path_graph(6))


def test_stability_examples():
    assert stability_at_most_two(complete_graph(4))
    assert stability_at_most_two(complement(path_graph(6)))
    assert not stability_at_most_two(empty_graph(3))


def test_m_degree_bound_examples():
    assert m_degree_bound(path_graph(5)) == 3
    assert m_degree_bound(complete_graph(4)) == 4
    assert m_degree_bound(star_graph(4)) == 2


def test_m_degree_bound_at_most_max_degree_plus_one():
    for g in random_graph_corpus(120, 9):
        assert m_degree_bound(g) <= g.max_degree() + 1


def test_m_i_count_star():
    star = star_graph(4)
    assert m_i_count(star, 3) == 1
    assert m_i_count(star, 5) == 1
    with pytest.raises(RangeError):
        m_i_count(star, 2)
    with pytest.raises(RangeError):
        m_i_count(star, 6)


def test_is_tree():
    assert is_tree(path_graph(6))
    assert not is_tree(cycle_graph(5))
    assert not is_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_decompose_path_is_leaf():
    expr = decompose_tree_cograph(path_graph(6))
    assert isinstance(expr, TreeLeaf)


def test_decompose_k3_is_join_of_singletons():
    expr = decompose_tree_cograph(complete_graph(3))
    assert isinstance(expr, TcJoin)
    assert len(expr.children) == 3
    assert all(isinstance(c, TreeLeaf) and c.tree.n == 1 for c in expr.children)


def test_decompose_c5_fails():
    with pytest.raises(NotTreeCograph):
        decompose_tree_cograph(cycle_graph(5))


def test_decompose_prefers_tree_leaf():
    assert isinstance(decompose_tree_cograph(path_graph(2)), TreeLeaf)
    assert isinstance(decompose_tree_cograph(empty_graph(1)), TreeLeaf)


def test_decompose_round_trips():
    rng = random.Random(5)
    cases = [
        complete_graph(4),
        complement(path_graph(6)),
        graph_union(complete_graph(3), complete_graph(3)),
        graph_join(path_graph(3), empty_graph(1)),
        graph_union(complement(path_graph(4)), path_graph(5)),
        complete_bipartite(2, 3),
    ]
    for g in cases:
        expr = decompose_tree_cograph(g)
        assert evaluate_tc(expr) == g
    # random unions/joins of small trees round-trip too
    for _ in range(30):
        parts = [path_graph(rng.randint(1, 4)) for _ in range(rng.randint(2, 3))]
        g = parts[0]
        for p in parts[1:]:
            g = graph_union(g, p) if rng.random() < 0.5 else graph_join(g, p)
        expr = decompose_tree_cograph(g)
        assert evaluate_tc(expr) == g


def test_union_join_children_ordering():
    g = graph_union(complete_graph(3), complete_graph(3))
    expr = decompose_tree_cograph(g)
    assert isinstance(expr, TcUnion)
    firsts = [min(c.vertices) if hasattr(c, "vertices") else None for c in expr.children]
    spans = []
    for c in expr.children:
        if isinstance(c, (TreeLeaf, CoTreeLeaf)):
            spans.append(min(c.vertices))
        else:
            spans.append(min(min(l.vertices) for l in _leaves(c)))
    assert spans == sorted(spans)


def _leaves(expr):
    if isinstance(expr, (TreeLeaf, CoTreeLeaf)):
        return [expr]
    return [l for c in expr.children for l in _leaves(c)]


def test_chromatic_stability2_examples():
    assert chromatic_stability2(complement(path_graph(6))) == 3
    assert chromatic_stability2(complete_graph(5)) == 5
    assert chromatic_stability2(complement(path_graph(5))) == 3
    with pytest.raises(StabilityTooLarge):
        chromatic_stability2(empty_graph(3))


def test_chromatic_stability2_against_oracle():
    rng = random.Random(11)
    from conftest import random_stability2

    for _ in range(60):
        g = random_stability2(rng.randint(1, 7), rng)
        assert chromatic_stability2(g) == oracle_chromatic(g)


def test_chi_le_chib_le_m_sampled():
    # sample of random graphs: chromatic <= b-chromatic <= degree bound
    rng = random.Random(3)
    for _ in range(250):
        n = rng.randint(1, 7)
        g = Graph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < rng.random()]
        )
        chi = oracle_chromatic(g)
        chib = oracle_chi_b(g)
        assert chi <= chib <= m_degree_bound(g)


def test_all_graphs_n4_chain():
    for g in all_graphs(4):
        chi = oracle_chromatic(g)
        chib = oracle_chi_b(g)
        assert chi <= chib <= m_degree_bound(g)
