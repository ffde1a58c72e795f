"""Incidence matrices, the Helmholtzian, and the signed graphs built from them.

Everything here is exact integer arithmetic (``int64`` arrays); floats only
appear once a matrix is handed to the eigensolver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import OrientedGraph, TriangleSet, triangle_degrees


class ConsistencyError(RuntimeError):
    """An identity that must hold by construction did not."""


@dataclass
class SignedGraph:
    """Signed graph on vertices ``0..n-1`` with optional positive loop weights.

    ``edges`` maps ``(i, j)`` with ``i < j`` to ``+1`` or ``-1``.
    """

    n: int
    edges: dict[tuple[int, int], int] = field(default_factory=dict)
    loops: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        for (i, j), s in self.edges.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"signed edge {(i, j)} must satisfy 0 <= i < j < n")
            if s not in (1, -1):
                raise ValueError(f"sign of {(i, j)} must be +1 or -1, got {s}")
        if self.loops and len(self.loops) != self.n:
            raise ValueError("loop weights must cover every vertex")
        if any(w < 0 for w in self.loops):
            raise ValueError("loop weights must be nonnegative")

    def adjacency(self, with_loops: bool = False) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for (i, j), s in self.edges.items():
            A[i, j] = A[j, i] = s
        if with_loops and self.loops:
            A[np.diag_indices(self.n)] = self.loops
        return A

    def neighbors(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(neighbor, sign)``, neighbors ascending."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (i, j), s in sorted(self.edges.items()):
            adj[i].append((j, s))
            adj[j].append((i, s))
        for row in adj:
            row.sort()
        return adj

    def reduced(self) -> "SignedGraph":
        return SignedGraph(self.n, dict(self.edges), (), self.labels)

    def positive_edges(self) -> list[tuple[int, int]]:
        return sorted(e for e, s in self.edges.items() if s > 0)

    def negative_edges(self) -> list[tuple[int, int]]:
        return sorted(e for e, s in self.edges.items() if s < 0)


def edge_vertex_incidence(og: OrientedGraph) -> np.ndarray:
    B = np.zeros((og.m, og.n), dtype=np.int64)
    for e, (t, h) in enumerate(og.arcs):
        B[e, t] = -1
        B[e, h] = 1
    return B


def _agrees(arc: tuple[int, int], cyc: tuple[int, int, int]) -> bool:
    x, y, z = cyc
    return arc in ((x, y), (y, z), (z, x))


def triangle_edge_incidence(og: OrientedGraph, t: TriangleSet) -> np.ndarray:
    idx = og.graph.edge_index()
    C = np.zeros((len(t), og.m), dtype=np.int64)
    for k in range(len(t)):
        cyc = t.cycle(k)
        for pair in t.edges_of(k):
            e = idx[pair]
            C[k, e] = 1 if _agrees(og.arcs[e], cyc) else -1
    return C


def laplacian(og: OrientedGraph) -> np.ndarray:
    B = edge_vertex_incidence(og)
    return B.T @ B


def helmholtzian_direct(og: OrientedGraph, t: TriangleSet) -> np.ndarray:
    """Entrywise definition: pairwise comparison of heads and tails."""
    m = og.m
    cotri = set()
    for k in range(len(t)):
        a, b, c = t.edges_of(k)
        cotri.update({frozenset((a, b)), frozenset((b, c)), frozenset((a, c))})
    tdeg = triangle_degrees(og.graph, t)
    H = np.zeros((m, m), dtype=np.int64)
    for e in range(m):
        H[e, e] = tdeg[e] + 2
        te, he = og.arcs[e]
        for f in range(e + 1, m):
            if frozenset((og.edges[e], og.edges[f])) in cotri:
                continue
            tf, hf = og.arcs[f]
            if he == tf or hf == te:
                H[e, f] = H[f, e] = -1
            elif he == hf or te == tf:
                H[e, f] = H[f, e] = 1
    return H


def helmholtzian_product(og: OrientedGraph, t: TriangleSet) -> np.ndarray:
    B = edge_vertex_incidence(og)
    C = triangle_edge_incidence(og, t)
    return B @ B.T + C.T @ C


def lambda_signed(og: OrientedGraph, t: TriangleSet) -> SignedGraph:
    """Signed graph on the edge set: loops carry triangle degree + 2.

    Built vertex by vertex: two edges meeting at ``w`` are joined unless the
    far endpoints are adjacent (then they share a triangle). Same role at
    ``w`` (both heads or both tails) gives ``+1``, mixed roles ``-1``.
    """
    g = og.graph
    incident: list[list[int]] = [[] for _ in range(og.n)]
    for e, (u, v) in enumerate(og.edges):
        incident[u].append(e)
        incident[v].append(e)
    signs: dict[tuple[int, int], int] = {}
    for w in range(og.n):
        inc = incident[w]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e, f = inc[a], inc[b]
                x = og.edges[e][0] + og.edges[e][1] - w
                y = og.edges[f][0] + og.edges[f][1] - w
                if g.has_edge(x, y):
                    continue
                e_is_head = og.arcs[e][1] == w
                f_is_head = og.arcs[f][1] == w
                signs[(min(e, f), max(e, f))] = 1 if e_is_head == f_is_head else -1
    loops = tuple(int(d) + 2 for d in triangle_degrees(g, t))
    labels = tuple(f"{tl}>{hd}" for tl, hd in og.arcs)
    return SignedGraph(og.m, signs, loops, labels)


def triangular_signed(og: OrientedGraph, t: TriangleSet) -> SignedGraph:
    """Signed graph on the triangles; sign +1 when two triangles run through
    their shared edge in the same direction. Edge orientations play no role."""
    by_edge: dict[tuple[int, int], list[int]] = {}
    for k in range(len(t)):
        for pair in t.edges_of(k):
            by_edge.setdefault(pair, []).append(k)
    signs: dict[tuple[int, int], int] = {}
    for pair, ks in by_edge.items():
        u, v = pair
        for a in range(len(ks)):
            for b in range(a + 1, len(ks)):
                k1, k2 = ks[a], ks[b]
                same = _agrees((u, v), t.cycle(k1)) == _agrees((u, v), t.cycle(k2))
                key = (min(k1, k2), max(k1, k2))
                if key in signs:
                    raise ConsistencyError(f"triangles {key} share more than one edge")
                signs[key] = 1 if same else -1
    labels = tuple("-".join(map(str, tri)) for tri in t.triangles)
    return SignedGraph(len(t), signs, (), labels)


def hprime(og: OrientedGraph, t: TriangleSet) -> np.ndarray:
    """Block matrix diag(L, 3I + A(G_tri)) of order n + #triangles."""
    B = edge_vertex_incidence(og)
    C = triangle_edge_incidence(og, t)
    if np.any(C @ B):
        raise ConsistencyError("triangle-edge times edge-vertex incidence is not zero")
    L = B.T @ B
    T = 3 * np.eye(len(t), dtype=np.int64) + triangular_signed(og, t).adjacency()
    n, k = L.shape[0], T.shape[0]
    out = np.zeros((n + k, n + k), dtype=np.int64)
    out[:n, :n] = L
    out[n:, n:] = T
    return out


# -- labels and export ----------------------------------------------------------


def vertex_labels(og: OrientedGraph) -> list[str]:
    return [str(v) for v in range(og.n)]


def edge_labels(og: OrientedGraph) -> list[str]:
    return [f"e{i + 1}:{tl}>{hd}" for i, (tl, hd) in enumerate(og.arcs)]


def triangle_labels(t: TriangleSet) -> list[str]:
    return ["t{}:{}".format(k + 1, "-".join(map(str, t.cycle(k)))) for k in range(len(t))]


def _fmt(x) -> str:
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def matrix_to_text(M: np.ndarray, row_labels: Sequence[str] = (), col_labels: Sequence[str] = ()) -> str:
    """Dense dump; labels, when given, go in a header line and a leading column."""
    M = np.asarray(M)
    if M.size == 0:
        return f"{M.shape[0]}x{M.shape[1]} matrix\n"
    cells = [[_fmt(x) for x in row] for row in M]
    if not row_labels:
        return "".join(" ".join(r) + "\n" for r in cells)
    width = max(len(c) for r in cells for c in r)
    width = max(width, *(len(c) for c in col_labels)) if col_labels else width
    lw = max(len(s) for s in row_labels)
    lines = []
    if col_labels:
        lines.append(" " * lw + "  " + " ".join(c.rjust(width) for c in col_labels))
    for lab, r in zip(row_labels, cells):
        lines.append(lab.ljust(lw) + "  " + " ".join(c.rjust(width) for c in r))
    return "\n".join(lines) + "\n"


def matrix_to_json(M: np.ndarray, row_labels: Sequence[str], col_labels: Sequence[str] | None = None) -> dict:
    M = np.asarray(M)
    rows = [[int(x) if float(x).is_integer() else float(x) for x in r] for r in M]
    out = {"labels": list(row_labels), "rows": rows}
    if col_labels is not None and list(col_labels) != list(row_labels):
        out["col_labels"] = list(col_labels)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
