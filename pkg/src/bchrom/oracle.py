"""Exhaustive reference implementations.

Every polynomial routine in this package is cross-checked against the
enumerations here at desk scale.  The code favors being obviously correct
over being clever: matchings are enumerated edge by edge, colorings are
enumerated canonically (first occurrence of each class fixes its index,
killing the t! symmetry).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, GraphTooLarge, RangeError
from .graph import Edge, Graph

INF = float("inf")


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 16
    max_states: int = 10**8

    def __post_init__(self) -> None:
        if self.max_n <= 0 or self.max_states <= 0:
            raise RangeError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Counter:
    __slots__ = ("left",)

    def __init__(self, limit: int) -> None:
        self.left = limit

    def tick(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded("enumeration state budget exhausted")


def _admit(g: Graph, budget: OracleBudget) -> _Counter:
    if g.n > budget.max_n:
        raise GraphTooLarge(f"n={g.n} exceeds oracle cap {budget.max_n}")
    return _Counter(budget.max_states)


# ---------------------------------------------------------------------------
# Matching enumeration
# ---------------------------------------------------------------------------


def _strongly_maximal_mask(g: Graph, chosen: list[Edge], mask: int) -> bool:
    free = ((1 << g.n) - 1) & ~mask
    for u, v in g.edges:
        if (free >> u) & 1 and (free >> v) & 1:
            return False
    for v, w in chosen:
        a = g.bits[v] & free
        b = g.bits[w] & free
        if a and b and not (a == b and a & (a - 1) == 0):
            return False
    return True


def _s1_s2_mask(g: Graph, chosen: list[Edge], mask: int) -> int:
    free = ((1 << g.n) - 1) & ~mask
    s1 = 0
    f = free
    while f:
        v = (f & -f).bit_length() - 1
        f &= f - 1
        if g.bits[v] & free:
            s1 += 1
    s2 = 0
    for v, w in chosen:
        a = g.bits[v] & free
        b = g.bits[w] & free
        if a and b and not (a == b and a & (a - 1) == 0):
            s2 += 1
    return s1 + s2


def oracle_min_smm(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[Edge]]:
    """Exact minimum strongly maximal matching by matching enumeration."""
    counter = _admit(g, budget)
    edges = g.edges
    L = len(edges)
    best_size = g.n + 1
    best: tuple[Edge, ...] = ()
    chosen: list[Edge] = []

    def rec(i: int, mask: int) -> None:
        nonlocal best_size, best
        counter.tick()
        if i == L:
            if len(chosen) < best_size and _strongly_maximal_mask(g, chosen, mask):
                best_size = len(chosen)
                best = tuple(chosen)
            return
        u, v = edges[i]
        bit = (1 << u) | (1 << v)
        if not mask & bit and len(chosen) + 1 < best_size:
            chosen.append((u, v))
            rec(i + 1, mask | bit)
            chosen.pop()
        rec(i + 1, mask)

    rec(0, 0)
    if best_size > g.n:
        # the empty matching is strongly maximal in an edgeless graph
        raise AssertionError("every graph has a strongly maximal matching")
    return best_size, frozenset(best)


def oracle_f_t_k(t: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> float:
    """Minimum of the two deficiency counts over matchings of size exactly k."""
    counter = _admit(t, budget)
    edges = t.edges
    L = len(edges)
    best = INF
    chosen: list[Edge] = []

    def rec(i: int, mask: int) -> None:
        nonlocal best
        counter.tick()
        if len(chosen) == k:
            val = _s1_s2_mask(t, chosen, mask)
            if val < best:
                best = val
            return
        if i == L or len(chosen) + (L - i) < k:
            return
        u, v = edges[i]
        bit = (1 << u) | (1 << v)
        if not mask & bit:
            chosen.append((u, v))
            rec(i + 1, mask | bit)
            chosen.pop()
        rec(i + 1, mask)

    rec(0, 0)
    return best if best is INF else int(best)


def oracle_nu(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum matching size, by memoized recursion over free-vertex masks."""
    counter = _admit(g, budget)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        counter.tick()
        v = (mask & -mask).bit_length() - 1
        best = rec(mask & ~(1 << v))
        avail = g.bits[v] & mask
        while avail:
            w = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            best = max(best, 1 + rec(mask & ~(1 << v) & ~(1 << w)))
        memo[mask] = best
        return best

    return rec((1 << g.n) - 1)


def oracle_shortest_augmenting(
    g: Graph, m: frozenset[Edge], budget: OracleBudget = DEFAULT_BUDGET
) -> int | None:
    """Edge count of a shortest augmenting path for m, by exhaustive DFS over
    simple alternating paths; None when m is maximum."""
    counter = _admit(g, budget)
    partner = {}
    for u, v in m:
        partner[u] = v
        partner[v] = u
    free = [v for v in range(g.n) if v not in partner]
    best: list[int | None] = [None]

    def walk(v: int, used: int, length: int) -> None:
        counter.tick()
        # at v after an even number of edges; next edge must be unmatched
        for w in g.adj[v]:
            if (used >> w) & 1:
                continue
            if w not in partner:
                if best[0] is None or length + 1 < best[0]:
                    best[0] = length + 1
                continue
            if best[0] is not None and length + 3 >= best[0]:
                continue
            x = partner[w]
            if (used >> x) & 1:
                continue
            walk(x, used | (1 << w) | (1 << x), length + 2)

    for s in free:
        walk(s, 1 << s, 0)
    return best[0]


# ---------------------------------------------------------------------------
# Coloring enumeration
# ---------------------------------------------------------------------------


def _scan_colorings(g: Graph, counter: _Counter, visit) -> None:
    """Enumerate proper colorings canonically (class i first appears before
    class i+1) and hand each one to ``visit`` as a list of class bitmasks."""
    n = g.n
    masks: list[int] = []

    def rec(v: int) -> None:
        counter.tick()
        if v == n:
            visit(masks)
            return
        bv = g.bits[v]
        for c in range(len(masks)):
            if not masks[c] & bv:
                masks[c] |= 1 << v
                rec(v + 1)
                masks[c] &= ~(1 << v)
        masks.append(1 << v)
        rec(v + 1)
        masks.pop()

    rec(0)


def _dominant_count(g: Graph, masks: list[int]) -> int:
    t = len(masks)
    count = 0
    for i, mi in enumerate(masks):
        found = False
        members = mi
        while members and not found:
            v = (members & -members).bit_length() - 1
            members &= members - 1
            if g.degree(v) < t - 1:
                continue
            bv = g.bits[v]
            ok = True
            for j in range(t):
                if j != i and not bv & masks[j]:
                    ok = False
                    break
            found = ok
        if found:
            count += 1
    return count


def oracle_dominance(g: Graph, budget: OracleBudget = DEFAULT_BUDGET):
    """Per class count t, the maximum number of dominant classes over all
    proper colorings with exactly t nonempty classes."""
    from .dominance import DominanceVector

    counter = _admit(g, budget)
    if g.n == 0:
        raise RangeError("dominance needs at least one vertex")
    best = [-1] * (g.n + 1)

    def visit(masks: list[int]) -> None:
        t = len(masks)
        d = _dominant_count(g, masks)
        if d > best[t]:
            best[t] = d

    _scan_colorings(g, counter, visit)
    chi = next(t for t in range(1, g.n + 1) if best[t] >= 0)
    return DominanceVector(chi, tuple(best[chi:]))


def oracle_chi_b(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest t admitting a proper t-coloring with all t classes dominant."""
    return oracle_dominance(g, budget).b_chromatic()


def oracle_chromatic(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    counter = _admit(g, budget)
    if g.n == 0:
        return 0
    n = g.n
    best = [n + 1]
    masks: list[int] = []

    def rec(v: int) -> None:
        counter.tick()
        if len(masks) >= best[0]:
            return
        if v == n:
            best[0] = len(masks)
            return
        bv = g.bits[v]
        for c in range(len(masks)):
            if not masks[c] & bv:
                masks[c] |= 1 << v
                rec(v + 1)
                masks[c] &= ~(1 << v)
        if len(masks) + 1 < best[0]:
            masks.append(1 << v)
            rec(v + 1)
            masks.pop()

    rec(0)
    return best[0]
