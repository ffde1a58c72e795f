"""Simple graphs, edge orientations, triangles, and the two text formats.

Vertices are ``0..n-1``. The order of ``Graph.edges`` is the row/column order
of every edge-indexed matrix in the package, so it is never re-sorted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

MAX_ENUMERATION_ORDER = 7


class ParseError(ValueError):
    """Malformed edge-list or graph6 input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {{{u},{v}}} outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        # cached lazily; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_es"]
        except KeyError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
            return es

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1
        return A

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``, relabelled to ``0..k-1`` in sorted order.

        Also returns, for each edge of the subgraph, its index in ``self.edges``.
        Subgraph edges keep the parent's relative order.
        """
        keep = sorted(set(vertices))
        relabel = {v: i for i, v in enumerate(keep)}
        sub_edges, parent_idx = [], []
        for i, (u, v) in enumerate(self.edges):
            if u in relabel and v in relabel:
                sub_edges.append((relabel[u], relabel[v]))
                parent_idx.append(i)
        return Graph(len(keep), tuple(sub_edges)), parent_idx


@dataclass(frozen=True)
class OrientedGraph:
    """A graph plus one (tail, head) arc per edge, aligned with ``graph.edges``."""

    graph: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.arcs) != self.graph.m:
            raise ValueError("need exactly one orientation per edge")
        for (t, h), e in zip(self.arcs, self.graph.edges):
            if t == h or (min(t, h), max(t, h)) != e:
                raise ValueError(f"arc {t}->{h} does not orient edge {e}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def edges(self):
        return self.graph.edges

    def tail(self, e: int) -> int:
        return self.arcs[e][0]

    def head(self, e: int) -> int:
        return self.arcs[e][1]


@dataclass(frozen=True)
class TriangleSet:
    """Triangles ``a < b < c`` in lexicographic order.

    ``orientation[k] == +1`` means triangle k is traversed ``a->b->c->a``,
    ``-1`` the reverse.
    """

    triangles: tuple[tuple[int, int, int], ...] = ()
    orientation: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.orientation:
            object.__setattr__(self, "orientation", (1,) * len(self.triangles))
        if len(self.orientation) != len(self.triangles):
            raise ValueError("one orientation per triangle")

    def __len__(self):
        return len(self.triangles)

    def cycle(self, k: int) -> tuple[int, int, int]:
        a, b, c = self.triangles[k]
        return (a, b, c) if self.orientation[k] > 0 else (a, c, b)

    def with_orientation(self, orientation: Sequence[int]) -> "TriangleSet":
        return TriangleSet(self.triangles, tuple(int(s) for s in orientation))

    def edges_of(self, k: int) -> tuple[tuple[int, int], ...]:
        a, b, c = self.triangles[k]
        return ((a, b), (b, c), (a, c))


def default_orientation(g: Graph) -> OrientedGraph:
    return OrientedGraph(g, tuple(g.edges))


def random_orientation(g: Graph, rng: random.Random) -> OrientedGraph:
    arcs = tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges)
    return OrientedGraph(g, arcs)


def orient(g: Graph, flips: Sequence[bool]) -> OrientedGraph:
    """Default orientation with edge ``i`` reversed where ``flips[i]`` is true."""
    arcs = tuple((v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips))
    return OrientedGraph(g, arcs)


def flip_edge(og: OrientedGraph, e: int) -> OrientedGraph:
    if not 0 <= e < og.m:
        raise IndexError(f"edge index {e} out of range for {og.m} edges")
    arcs = list(og.arcs)
    t, h = arcs[e]
    arcs[e] = (h, t)
    return OrientedGraph(og.graph, tuple(arcs))


def enumerate_triangles(g: Graph) -> TriangleSet:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    tris = []
    for a in range(g.n):
        for b in sorted(x for x in adj[a] if x > a):
            for c in sorted(x for x in adj[a] & adj[b] if x > b):
                tris.append((a, b, c))
    return TriangleSet(tuple(tris))


def triangle_degrees(g: Graph, t: TriangleSet) -> np.ndarray:
    idx = g.edge_index()
    deg = np.zeros(g.m, dtype=np.int64)
    for k in range(len(t)):
        for e in t.edges_of(k):
            deg[idx[e]] += 1
    return deg


# -- text formats -------------------------------------------------------------


def parse_edge_list(text: str) -> OrientedGraph:
    """Parse ``u v`` / ``u>v`` lines; ``#`` starts a comment.

    Also accepts ``,`` or ``;`` as edge separators so a whole graph fits on a
    command line.
    """
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for item in line.replace(";", ",").split(","):
            item = item.strip()
            if not item:
                continue
            if ">" in item:
                parts = item.split(">")
            else:
                parts = item.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'u v' or 'u>v', got {item!r}")
            try:
                u, v = (int(p.strip()) for p in parts)
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex in {item!r}") from None
            if u < 0 or v < 0:
                raise ParseError(f"line {lineno}: negative vertex label in {item!r}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(
                    f"line {lineno}: duplicate edge {{{u},{v}}} (first seen on line {seen[key]})"
                )
            seen[key] = lineno
            arcs.append((u, v) if ">" in item else key)
    n = 1 + max((max(a) for a in arcs), default=-1)
    g = Graph(n, tuple(arcs))
    return OrientedGraph(g, tuple(arcs))


def format_edge_list(og: OrientedGraph) -> str:
    return "".join(f"{t}>{h}\n" for t, h in og.arcs)


def _pairs_colmajor(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    bad = [ch for ch in s if not 63 <= ord(ch) <= 126]
    if bad:
        raise ParseError(f"graph6: character {bad[0]!r} outside ASCII 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("graph6: only the short form (n <= 62) is supported")
    pairs = _pairs_colmajor(n)
    nbytes = -(-len(pairs) // 6)
    if len(s) != 1 + nbytes:
        raise ParseError(f"graph6: expected {1 + nbytes} characters for n={n}, got {len(s)}")
    edges = []
    for k, pair in enumerate(pairs):
        byte = ord(s[1 + k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            edges.append(pair)
    return Graph(n, tuple(edges))


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 short form supports n <= 62")
    present = g._edge_set
    bits = [1 if p in present else 0 for p in _pairs_colmajor(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = _pairs_colmajor(n)
    return Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices; bit k of the mask is the k-th graph6 pair."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        yield graph_from_mask(n, mask)


def all_graphs_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_all_graphs(n)


def brute_force_triangle_count(g: Graph) -> int:
    return sum(
        1 for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
