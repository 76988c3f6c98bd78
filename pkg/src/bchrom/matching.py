"""Matchings, augmenting paths and strong maximality.

A matching is a frozenset of normalized edges.  A matching is *strongly
maximal* when it admits no augmenting path of length one or three; those two
lengths are exactly what b-colorings of stability-2 graphs care about.

Shortest augmenting paths of length five or more are found exactly by a
reduction to maximum-weight perfect matching: among matchings of size
``|M|+1``, one maximizing ``|M' & M|`` differs from M in a single shortest
augmenting path (any balanced or negative component of the symmetric
difference could be flipped to increase the overlap).
"""

from __future__ import annotations

import networkx as nx

from .errors import InvalidMatching, NotAugmenting
from .graph import Edge, Graph, norm_edge

Matching = frozenset[Edge]
AltPath = tuple[int, ...]


def validate_matching(g: Graph, m: Matching) -> set[int]:
    """Check m is a matching of g; return the set of matched vertices."""
    matched: set[int] = set()
    for u, v in m:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidMatching(f"({u},{v}) is not an edge of the graph")
        if u in matched or v in matched:
            raise InvalidMatching(f"vertex shared by two matching edges at ({u},{v})")
        matched.add(u)
        matched.add(v)
    return matched


def matched_with(m: Matching) -> dict[int, int]:
    partner: dict[int, int] = {}
    for u, v in m:
        partner[u] = v
        partner[v] = u
    return partner


def _free_neighbors(g: Graph, matched: set[int], v: int) -> list[int]:
    return [w for w in g.adj[v] if w not in matched]


def is_strongly_maximal(g: Graph, m: Matching) -> bool:
    """No augmenting path of length one or three exists for m in g."""
    matched = validate_matching(g, m)
    for u, v in g.edges:
        if u not in matched and v not in matched:
            return False
    for v, w in m:
        a = _free_neighbors(g, matched, v)
        b = _free_neighbors(g, matched, w)
        if a and b and (len(a) > 1 or len(b) > 1 or a[0] != b[0]):
            return False
    return True


def find_short_augmenting(g: Graph, m: Matching) -> AltPath | None:
    """A shortest augmenting path of length one or three, or None.

    Ties break on the lexicographically smallest vertex sequence after
    orienting each path so it starts at its smaller endpoint.
    """
    matched = validate_matching(g, m)
    for u, v in g.edges:  # edges iterate in sorted order
        if u not in matched and v not in matched:
            return (u, v)
    best: AltPath | None = None
    for v, w in sorted(m):
        for p, q in ((v, w), (w, v)):
            for u in _free_neighbors(g, matched, p):
                for x in _free_neighbors(g, matched, q):
                    if u == x:
                        continue
                    seq = (u, p, q, x)
                    if seq[0] > seq[-1]:
                        seq = seq[::-1]
                    if best is None or seq < best:
                        best = seq
    return best


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching (mature blossom implementation)."""
    if g.n == 0 or g.m == 0:
        return frozenset()
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    mate = nx.max_weight_matching(G, maxcardinality=True)
    return frozenset(norm_edge(u, v) for u, v in mate)


def min_length_augmenting_path(g: Graph, m: Matching) -> AltPath | None:
    """An augmenting path with the fewest edges, or None iff m is maximum."""
    short = find_short_augmenting(g, m)
    if short is not None:
        return short
    k = len(m) + 1
    if 2 * k > g.n:
        return None
    dummies = g.n - 2 * k
    G = nx.Graph()
    G.add_nodes_from(range(g.n + dummies))
    for u, v in g.edges:
        G.add_edge(u, v, weight=1 if (u, v) in m else 0)
    for t in range(dummies):
        d = g.n + t
        for v in range(g.n):
            G.add_edge(d, v, weight=0)
    mate = nx.max_weight_matching(G, maxcardinality=True)
    if 2 * len(mate) < g.n + dummies:
        return None  # no matching of size |m|+1 exists at all
    chosen = frozenset(
        norm_edge(u, v) for u, v in mate if u < g.n and v < g.n
    )
    diff = m ^ chosen
    # by the overlap argument the difference is one augmenting path
    deg: dict[int, list[int]] = {}
    for u, v in diff:
        deg.setdefault(u, []).append(v)
        deg.setdefault(v, []).append(u)
    ends = sorted(v for v, nbrs in deg.items() if len(nbrs) == 1)
    if len(ends) != 2 or any(len(nbrs) > 2 for nbrs in deg.values()):
        raise AssertionError("symmetric difference is not a single path")
    path = [ends[0]]
    prev = -1
    while path[-1] != ends[1]:
        nxt = [w for w in deg[path[-1]] if w != prev]
        prev = path[-1]
        path.append(nxt[0])
    if len(path) != len(deg):
        raise AssertionError("symmetric difference is not a single path")
    if path[0] > path[-1]:
        path.reverse()
    return tuple(path)


def augment(m: Matching, p: AltPath) -> Matching:
    """Symmetric difference of m with the edges of an augmenting path p."""
    p = tuple(p)
    if len(p) < 2 or len(p) % 2 != 0 or len(set(p)) != len(p):
        raise NotAugmenting("augmenting paths have an odd number of edges")
    matched = {v for e in m for v in e}
    if p[0] in matched or p[-1] in matched:
        raise NotAugmenting("path endpoints must be unmatched")
    path_edges = []
    for i in range(len(p) - 1):
        e = norm_edge(p[i], p[i + 1])
        in_m = e in m
        if in_m != (i % 2 == 1):
            raise NotAugmenting("path edges must alternate, starting unmatched")
        path_edges.append(e)
    return frozenset(m ^ set(path_edges))


def s1_s2(g: Graph, m: Matching) -> tuple[int, int]:
    """Deficiency statistics of a matching.

    The first count is unmatched vertices with an unmatched neighbor; the
    second is matching edges sitting at the center of a length-3 augmenting
    path.  They sum to zero exactly when m is strongly maximal.
    """
    matched = validate_matching(g, m)
    s1 = 0
    for v in range(g.n):
        if v not in matched and any(w not in matched for w in g.adj[v]):
            s1 += 1
    s2 = 0
    for v, w in m:
        a = _free_neighbors(g, matched, v)
        b = _free_neighbors(g, matched, w)
        if a and b and (len(a) > 1 or len(b) > 1 or a[0] != b[0]):
            s2 += 1
    return s1, s2
