"""Named graphs used as fixtures and as closed-form spectrum oracles."""

from __future__ import annotations

from .graph import Graph, OrientedGraph, TriangleSet, enumerate_triangles, parse_edge_list

# Six oriented edges e1..e6 of the five-vertex worked example (vertices v1..v5 -> 0..4).
FIG1_EDGE_LIST = "0>1\n2>1\n1>4\n3>4\n3>2\n3>1\n"

# Printed triangle orientations for the same example: {1,2,3} runs 3->2->1, {1,3,4} runs 1->3->4.
FIG1_TRIANGLE_ORIENTATION = (-1, 1)

FIG1_B = [
    [-1, 1, 0, 0, 0],
    [0, 1, -1, 0, 0],
    [0, -1, 0, 0, 1],
    [0, 0, 0, -1, 1],
    [0, 0, 1, -1, 0],
    [0, 1, 0, -1, 0],
]
FIG1_C = [
    [0, 1, 0, 0, 1, -1],
    [0, 0, -1, 1, 0, -1],
]
FIG1_H = [
    [2, 1, -1, 0, 0, 1],
    [1, 3, -1, 0, 0, 0],
    [-1, -1, 3, 0, 0, 0],
    [0, 0, 0, 3, 1, 0],
    [0, 0, 0, 1, 3, 0],
    [1, 0, 0, 0, 0, 4],
]

# Three triangles glued at a hub (vertex 0); edges listed as e1..e9.
# Ring vertices: T1=1, T2=2, T3=3, T4=4, T5=5, T6=6.
FIG2_G1_EDGE_LIST = "0>1\n2>0\n0>5\n6>0\n0>4\n3>0\n1>2\n5>6\n4>3\n"
FIG2_G2_EDGE_LIST = "0>1\n2>0\n5>0\n0>6\n0>4\n0>3\n1>2\n6>5\n4>3\n"

# Drawn signed graph on e1..e6 (1-based pairs); e7, e8, e9 are isolated.
FIG2_LAMBDA_G1_POSITIVE = [(1, 3), (4, 6), (1, 5), (2, 6), (2, 4), (3, 5)]
FIG2_LAMBDA_G1_NEGATIVE = [(1, 6), (1, 4), (3, 6), (2, 5), (2, 3), (4, 5)]
FIG2_LAMBDA_G2_POSITIVE = [(1, 3), (4, 6), (1, 5), (2, 6), (2, 4), (1, 6), (1, 4), (2, 5), (4, 5)]
FIG2_LAMBDA_G2_NEGATIVE = [(3, 5), (3, 6), (2, 3)]


def fig1() -> OrientedGraph:
    return parse_edge_list(FIG1_EDGE_LIST)


def fig1_triangles() -> TriangleSet:
    """Triangles of the worked example with the printed orientations."""
    return enumerate_triangles(fig1().graph).with_orientation(FIG1_TRIANGLE_ORIENTATION)


def fig2_g1() -> OrientedGraph:
    return parse_edge_list(FIG2_G1_EDGE_LIST)


def fig2_g2() -> OrientedGraph:
    return parse_edge_list(FIG2_G2_EDGE_LIST)


def complete(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def star(k: int) -> Graph:
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def friendship(n: int) -> Graph:
    """Cone over ``n`` disjoint edges: hub 0, blades (2i-1, 2i)."""
    if n < 1:
        raise ValueError("friendship graph needs n >= 1")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * n + 1, tuple(edges))


def icosahedron() -> Graph:
    """Pentagonal antiprism (rings 1..5 and 6..10) capped by poles 0 and 11."""
    edges = []
    for k in range(5):
        up, up_next = 1 + k, 1 + (k + 1) % 5
        lo, lo_next = 6 + k, 6 + (k + 1) % 5
        edges += [(0, up), (up, up_next), (lo, lo_next), (up, lo), (up, lo_next), (lo, 11)]
    return Graph(12, tuple(edges))


FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "friendship": friendship,
}
