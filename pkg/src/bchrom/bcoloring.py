"""Colorings, b-coloring verification, and the bijection between colorings
of a stability-2 graph and matchings of its complement.

A proper coloring of a graph without three pairwise non-adjacent vertices
has classes of size at most two; the size-two classes form a matching of
the complement, and the coloring is a b-coloring exactly when that matching
is strongly maximal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClassTooLarge,
    EmptyClass,
    ImproperColoring,
    InstanceTooLargeForExactSearch,
    NotABColoring,
    StabilityTooLarge,
)
from .graph import Graph, complement, is_forest, norm_edge, stability_at_most_two
from .matching import (
    Matching,
    augment,
    min_length_augmenting_path,
    validate_matching,
)
from .oracle import DEFAULT_BUDGET, OracleBudget, oracle_min_smm
from .tree_dp import min_smm_forest


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]
    t: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.t)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class BVerdict:
    is_b_coloring: bool
    dominant_classes: frozenset[int]
    witnesses: tuple[tuple[int, int], ...]  # (class, lowest dominating vertex)


def validate_coloring(g: Graph, c: Coloring) -> list[list[int]]:
    if len(c.assignment) != g.n:
        raise ImproperColoring("assignment length differs from vertex count")
    if any(not 0 <= x < c.t for x in c.assignment):
        raise ImproperColoring("color index out of range")
    classes = c.classes()
    for idx, members in enumerate(classes):
        if not members:
            raise EmptyClass(f"class {idx} is empty")
    for u, v in g.edges:
        if c.assignment[u] == c.assignment[v]:
            raise ImproperColoring(f"adjacent vertices {u},{v} share a class")
    return classes


def verify_coloring(g: Graph, c: Coloring) -> BVerdict:
    """Dominant classes with their lowest dominating vertices."""
    classes = validate_coloring(g, c)
    masks = [0] * c.t
    for v, col in enumerate(c.assignment):
        masks[col] |= 1 << v
    dominant = []
    witnesses = []
    for idx, members in enumerate(classes):
        for v in members:
            if g.degree(v) < c.t - 1:
                continue
            bv = g.bits[v]
            if all(bv & masks[j] for j in range(c.t) if j != idx):
                dominant.append(idx)
                witnesses.append((idx, v))
                break
    return BVerdict(len(dominant) == c.t, frozenset(dominant), tuple(witnesses))


def coloring_to_matching(g: Graph, c: Coloring) -> Matching:
    """The size-two classes of c, read as edges of the complement."""
    if not stability_at_most_two(g):
        raise StabilityTooLarge("bijection requires stability <= 2")
    classes = validate_coloring(g, c)
    edges = []
    for members in classes:
        if len(members) > 2:
            raise ClassTooLarge("color class of size three or more")
        if len(members) == 2:
            edges.append(norm_edge(members[0], members[1]))
    return frozenset(edges)


def matching_to_coloring(g: Graph, m: Matching) -> Coloring:
    """Matched pairs share a class, everything else is a singleton; classes
    are numbered by their smallest vertex."""
    if not stability_at_most_two(g):
        raise StabilityTooLarge("bijection requires stability <= 2")
    co = complement(g)
    validate_matching(co, m)
    partner = {}
    for u, v in m:
        partner[u] = v
        partner[v] = u
    color = [-1] * g.n
    nxt = 0
    for v in range(g.n):
        if color[v] != -1:
            continue
        color[v] = nxt
        if v in partner and partner[v] > v:
            color[partner[v]] = nxt
        nxt += 1
    return Coloring(tuple(color), nxt)


def b_chromatic_stability2(
    g: Graph, oracle_cap: int = 16, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, Coloring]:
    """Exact b-chromatic number of a stability-2 graph with a witness.

    Routes: complement a forest -> per-component tree DP; otherwise brute
    force up to the cap; otherwise refuse, since the general problem is
    NP-hard and a heuristic answer would misrepresent the guarantee.
    """
    if not stability_at_most_two(g):
        raise StabilityTooLarge("b-chromatic shortcut requires stability <= 2")
    if g.n == 1:
        return 1, Coloring((0,), 1)
    co = complement(g)
    if is_forest(co):
        size, mm = min_smm_forest(co)
    elif g.n <= oracle_cap:
        size, mm = oracle_min_smm(co, budget)
    else:
        raise InstanceTooLargeForExactSearch(
            f"n={g.n} exceeds the exact-search cap {oracle_cap} and the "
            "complement is not a forest"
        )
    return g.n - size, matching_to_coloring(g, mm)


def continuity_chain(g: Graph, c: Coloring) -> list[Coloring]:
    """b-colorings with t, t-1, ..., chi classes, obtained by repeatedly
    augmenting the complement matching along a minimum-length path."""
    verdict = verify_coloring(g, c)
    if not verdict.is_b_coloring:
        raise NotABColoring("chain must start from a b-coloring")
    co = complement(g)
    m = coloring_to_matching(g, c)
    chain = [c]
    while True:
        path = min_length_augmenting_path(co, m)
        if path is None:
            return chain
        m = augment(m, path)
        chain.append(matching_to_coloring(g, m))
