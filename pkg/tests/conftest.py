"""Shared graph corpora for the test-suite."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from bchrom.generators import random_graph, random_labeled_tree, random_triangle_free
from bchrom.graph import Graph, complement, path_graph, star_graph


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if (mask >> i) & 1))


def spider(legs: list[int]) -> Graph:
    """One hub with paths of the given lengths hanging off it."""
    edges = []
    nid = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nid))
            prev = nid
            nid += 1
    return Graph.from_edges(nid, edges)


def _partitions(total: int, parts: int, minimum: int = 1):
    if parts == 1:
        if total >= minimum:
            yield [total]
        return
    for first in range(minimum, total - (parts - 1) * minimum + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def tree_catalog(max_n: int, extra_random: int, seed: int = 2024) -> list[Graph]:
    """Paths, stars and spiders up to max_n, topped up with random trees."""
    rng = random.Random(seed)
    out: list[Graph] = []
    for n in range(2, max_n + 1):
        out.append(path_graph(n))
        if n >= 3:
            out.append(star_graph(n - 1))
    for n in range(4, max_n + 1):
        for parts in range(3, n):
            for legs in _partitions(n - 1, parts):
                g = spider(legs)
                if g.n <= max_n:
                    out.append(g)
    while len(out) < extra_random:
        out.append(random_labeled_tree(rng.randint(2, max_n), rng))
    return out


def random_stability2(n: int, rng: random.Random, p: float | None = None) -> Graph:
    tri_free = random_triangle_free(n, rng.uniform(0.2, 0.9) if p is None else p, rng)
    return complement(tri_free)


def random_graph_corpus(count: int, max_n: int, seed: int = 99) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_graph(rng.randint(1, max_n), rng.uniform(0.1, 0.9), rng)
        for _ in range(count)
    ]


@pytest.fixture(scope="session")
def piv11() -> Graph:
    """Pivoted tree: hub 1 with subtrees making vertices 1..4 dense and
    vertex 0 the pivot."""
    return Graph.from_edges(
        11,
        [(0, 1), (1, 2), (1, 3), (0, 4), (2, 5), (2, 6), (3, 7), (3, 8), (4, 9), (4, 10)],
    )
