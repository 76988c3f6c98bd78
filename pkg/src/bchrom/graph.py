"""Simple undirected graphs, structural predicates and tree-cograph
decomposition.

Vertices are dense integers ``0..n-1``.  Graphs are immutable; adjacency is
stored as sorted tuples, so equality is structural and instances are
hashable.  All operations here are pure functions of their inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import NotATree, NotTreeCograph, RangeError, StabilityTooLarge

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Order an edge's endpoints ascending."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a canonical graph; duplicate edges collapse silently."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def bits(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, one integer per vertex."""
        out = []
        for nbrs in self.adj:
            b = 0
            for w in nbrs:
                b |= 1 << w
            out.append(b)
        return tuple(out)

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    adj = []
    for v in range(g.n):
        mask = full & ~g.bits[v] & ~(1 << v)
        adj.append(tuple(w for w in range(g.n) if (mask >> w) & 1))
    return Graph(g.n, tuple(adj))


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges:
        if g.bits[u] & g.bits[v]:
            return False
    return True


def stability_at_most_two(g: Graph) -> bool:
    """True iff the complement contains no triangle, i.e. no three pairwise
    non-adjacent vertices exist in g."""
    return is_triangle_free(complement(g))


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``, relabelled 0..k-1 in sorted order."""
    verts = sorted(set(keep))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u in verts
        for v in g.adj[u]
        if u < v and v in index
    ]
    return Graph.from_edges(len(verts), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def m_degree_bound(g: Graph) -> int:
    """Largest i such that at least i vertices have degree >= i-1."""
    if g.n < 1:
        raise RangeError("m-bound requires at least one vertex")
    degs = sorted((len(a) for a in g.adj), reverse=True)
    # with degrees non-increasing the predicate holds on a prefix of i
    m = 0
    for i, d in enumerate(degs, start=1):
        if d < i - 1:
            break
        m = i
    return m


def m_i_count(t: Graph, i: int) -> int:
    """Number of tree vertices of degree at least i-1, for i strictly above
    the degree bound and at most max degree + 1."""
    if not is_tree(t):
        raise NotATree("m_i is defined for trees")
    m = m_degree_bound(t)
    delta = t.max_degree()
    if not (m < i <= delta + 1):
        raise RangeError(f"i={i} outside ({m}, {delta + 1}]")
    return sum(1 for v in range(t.n) if t.degree(v) >= i - 1)


def chromatic_stability2(g: Graph) -> int:
    """Chromatic number of a graph with stability at most two.

    Color classes have size at most two, so a minimum coloring pairs up as
    many vertices as a maximum matching of the complement allows.
    """
    if not stability_at_most_two(g):
        raise StabilityTooLarge("chromatic shortcut needs stability <= 2")
    from .matching import maximum_matching

    return g.n - len(maximum_matching(complement(g)))


# ---------------------------------------------------------------------------
# Tree-cograph decomposition expressions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeLeaf:
    """A leaf denoting the stored tree itself.

    ``vertices[i]`` is the id, in the denoted graph, of local vertex i.
    """

    tree: Graph
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_tree(self.tree):
            raise NotATree("leaf graph must be a tree")
        if len(self.vertices) != self.tree.n:
            raise ValueError("vertex map length mismatch")

    @property
    def span(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class CoTreeLeaf:
    """A leaf denoting the complement of the stored tree."""

    tree: Graph
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_tree(self.tree):
            raise NotATree("leaf graph must be a tree")
        if len(self.vertices) != self.tree.n:
            raise ValueError("vertex map length mismatch")

    @property
    def span(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class TcUnion:
    children: tuple["TcExpr", ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("union needs at least two children")

    @property
    def span(self) -> int:
        return sum(c.span for c in self.children)


@dataclass(frozen=True)
class TcJoin:
    children: tuple["TcExpr", ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("join needs at least two children")

    @property
    def span(self) -> int:
        return sum(c.span for c in self.children)


TcExpr = TreeLeaf | CoTreeLeaf | TcUnion | TcJoin


def _leaf_vertex_sets(e: TcExpr) -> list[int]:
    if isinstance(e, (TreeLeaf, CoTreeLeaf)):
        return list(e.vertices)
    out: list[int] = []
    for c in e.children:
        out.extend(_leaf_vertex_sets(c))
    return out


def evaluate_tc(e: TcExpr) -> Graph:
    """Build the graph an expression denotes, honoring the leaf vertex maps."""
    verts = _leaf_vertex_sets(e)
    n = len(verts)
    if sorted(verts) != list(range(n)):
        raise ValueError("leaf vertex maps must partition 0..n-1")
    edges: list[Edge] = []

    def walk(node: TcExpr) -> list[int]:
        if isinstance(node, TreeLeaf):
            edges.extend(
                norm_edge(node.vertices[u], node.vertices[v])
                for u, v in node.tree.edges
            )
            return list(node.vertices)
        if isinstance(node, CoTreeLeaf):
            co = complement(node.tree)
            edges.extend(
                norm_edge(node.vertices[u], node.vertices[v]) for u, v in co.edges
            )
            return list(node.vertices)
        spans = [walk(c) for c in node.children]
        if isinstance(node, TcJoin):
            for i in range(len(spans)):
                for j in range(i + 1, len(spans)):
                    edges.extend(norm_edge(a, b) for a in spans[i] for b in spans[j])
        return [v for s in spans for v in s]

    walk(e)
    return Graph.from_edges(n, edges)


def decompose_tree_cograph(g: Graph) -> TcExpr:
    """Four-case recursion: tree leaf, co-tree leaf, union over components,
    join over co-components; fails with NotTreeCograph otherwise.

    Tree leaves win over co-tree leaves when both apply, and children are
    ordered by their smallest contained vertex, so the result is canonical.
    """

    def rec(sub: Graph, ids: tuple[int, ...]) -> TcExpr:
        if is_tree(sub):
            return TreeLeaf(sub, ids)
        co = complement(sub)
        if is_tree(co):
            return CoTreeLeaf(co, ids)
        comps = connected_components(sub)
        if len(comps) > 1:
            return TcUnion(
                tuple(
                    rec(induced_subgraph(sub, c), tuple(ids[v] for v in c))
                    for c in comps
                )
            )
        cocomps = connected_components(co)
        if len(cocomps) > 1:
            return TcJoin(
                tuple(
                    rec(induced_subgraph(sub, c), tuple(ids[v] for v in c))
                    for c in cocomps
                )
            )
        raise NotTreeCograph(
            "connected graph with connected complement that is neither a tree "
            "nor a co-tree"
        )

    return rec(g, tuple(range(g.n)))


# ---------------------------------------------------------------------------
# Small constructors, used across the test-suite and the CLI
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def graph_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted by a.n."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph.from_edges(a.n + b.n, edges)


def graph_join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges across the two parts."""
    edges = list(graph_union(a, b).edges)
    edges += [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return Graph.from_edges(a.n + b.n, edges)
