"""Text formats: edge lists, decomposition expressions, matchings, colorings.

Edge-list format (bit-exact): UTF-8; lines starting ``#`` are comments; the
first non-comment line is ``p <n> <m>``; exactly m lines ``e <u> <v>`` with
``0 <= u < v < n`` follow.  Duplicate or out-of-range edges are parse errors.

Expression format: s-expressions over
``(tree <file|inline>) | (cotree ...) | (union e e+) | (join e e+)`` where
the inline form lists n and then edge pairs.  Vertex ids of the denoted
graph are assigned to leaves depth-first, left to right.
"""

from __future__ import annotations

import os

from .errors import ParseError
from .graph import (
    CoTreeLeaf,
    Edge,
    Graph,
    TcExpr,
    TcJoin,
    TcUnion,
    TreeLeaf,
    norm_edge,
)
from .matching import Matching


def parse_edgelist(text: str) -> Graph:
    n = None
    m = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer counts") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative counts")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoints") from None
        if not (0 <= u < v < n):
            raise ParseError(f"line {lineno}: edge ({u},{v}) violates 0 <= u < v < n")
        if (u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edgelist(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def write_edgelist(path: str, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edgelist(g))


# ---------------------------------------------------------------------------
# Decomposition expressions
# ---------------------------------------------------------------------------


def _tokenize(text: str) -> list[str]:
    out = []
    token = ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string literal")
            out.append('"' + text[i + 1 : j])
            i = j + 1
            continue
        if ch in "()":
            if token:
                out.append(token)
                token = ""
            out.append(ch)
        elif ch.isspace():
            if token:
                out.append(token)
                token = ""
        else:
            token += ch
        i += 1
    if token:
        out.append(token)
    return out


def parse_tc_expression(text: str, base_dir: str = ".") -> TcExpr:
    tokens = _tokenize(text)
    pos = [0]

    def peek() -> str:
        if pos[0] >= len(tokens):
            raise ParseError("unexpected end of expression")
        return tokens[pos[0]]

    def take() -> str:
        tok = peek()
        pos[0] += 1
        return tok

    def expect(tok: str) -> None:
        got = take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, found {got!r}")

    counter = [0]

    def parse_leaf_graph() -> Graph:
        tok = take()
        if tok.startswith('"') or not tok.lstrip("-").isdigit():
            path = tok[1:] if tok.startswith('"') else tok
            full = path if os.path.isabs(path) else os.path.join(base_dir, path)
            try:
                return read_edgelist(full)
            except OSError as exc:
                raise ParseError(f"cannot read leaf file {path!r}: {exc}") from None
        try:
            n = int(tok)
        except ValueError:
            raise ParseError(f"bad leaf size {tok!r}") from None
        nums = []
        while peek() != ")":
            word = take()
            try:
                nums.append(int(word))
            except ValueError:
                raise ParseError(f"bad vertex id {word!r}") from None
        if len(nums) % 2:
            raise ParseError("inline leaf lists whole edge pairs")
        edges = [(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)]
        try:
            return Graph.from_edges(n, edges)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def parse_expr() -> TcExpr:
        expect("(")
        head = take()
        if head in ("tree", "cotree"):
            g = parse_leaf_graph()
            expect(")")
            ids = tuple(range(counter[0], counter[0] + g.n))
            counter[0] += g.n
            try:
                return TreeLeaf(g, ids) if head == "tree" else CoTreeLeaf(g, ids)
            except Exception as exc:
                raise ParseError(f"invalid {head} leaf: {exc}") from None
        if head in ("union", "join"):
            children = []
            while peek() != ")":
                children.append(parse_expr())
            expect(")")
            if len(children) < 2:
                raise ParseError(f"{head} needs at least two children")
            return TcUnion(tuple(children)) if head == "union" else TcJoin(tuple(children))
        raise ParseError(f"unknown expression head {head!r}")

    expr = parse_expr()
    if pos[0] != len(tokens):
        raise ParseError("trailing tokens after expression")
    return expr


def read_tc_expression(path: str) -> TcExpr:
    with open(path, encoding="utf-8") as fh:
        return parse_tc_expression(fh.read(), base_dir=os.path.dirname(path) or ".")


def format_tc_expression(e: TcExpr) -> str:
    if isinstance(e, (TreeLeaf, CoTreeLeaf)):
        head = "tree" if isinstance(e, TreeLeaf) else "cotree"
        nums = " ".join(f"{u} {v}" for u, v in e.tree.edges)
        body = f"{e.tree.n} {nums}".strip()
        return f"({head} {body})"
    head = "union" if isinstance(e, TcUnion) else "join"
    return "(" + head + " " + " ".join(format_tc_expression(c) for c in e.children) + ")"


# ---------------------------------------------------------------------------
# Matchings and colorings
# ---------------------------------------------------------------------------


def format_matching(m: Matching) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(m))


def parse_matching(text: str) -> Matching:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoints") from None
        edges.append(norm_edge(u, v))
    return frozenset(edges)


def format_coloring(c) -> str:
    return "".join(f"{v} {cls}\n" for v, cls in enumerate(c.assignment))


def parse_coloring(text: str, n: int):
    from .bcoloring import Coloring

    assign = [-1] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<vertex> <class>'")
        try:
            v, cls = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer fields") from None
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v} out of range")
        if assign[v] != -1:
            raise ParseError(f"line {lineno}: vertex {v} colored twice")
        if cls < 0:
            raise ParseError(f"line {lineno}: negative class")
        assign[v] = cls
    if any(x == -1 for x in assign):
        raise ParseError("some vertex has no color")
    return Coloring(tuple(assign), max(assign) + 1)
