"""Balance, switching, irreducibility and nonnegative orientations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .graph import (
    Graph,
    OrientedGraph,
    TriangleSet,
    default_orientation,
    enumerate_triangles,
    orient,
    triangle_degrees,
)
from .incidence import ConsistencyError, SignedGraph, helmholtzian_direct, lambda_signed


@dataclass
class SwitchingCertificate:
    assignment: list[int]
    balanced: bool
    witness_cycle: list[int] | None = None

    def __bool__(self):
        return self.balanced


def is_balanced(sg: SignedGraph) -> SwitchingCertificate:
    """BFS sign propagation; loops are ignored.

    Each component is rooted at its smallest vertex. On the first conflict the
    fundamental cycle through the offending edge is returned as a witness.
    """
    adj = sg.neighbors()
    sign = [0] * sg.n
    parent = [-1] * sg.n
    for root in range(sg.n):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s in adj[x]:
                if not sign[y]:
                    sign[y] = sign[x] * s
                    parent[y] = x
                    queue.append(y)
                elif sign[x] * s * sign[y] < 0:
                    return SwitchingCertificate(sign, False, _tree_cycle(parent, x, y))
    return SwitchingCertificate(sign, True)


def _tree_cycle(parent: list[int], x: int, y: int) -> list[int]:
    up_x = [x]
    while parent[up_x[-1]] != -1:
        up_x.append(parent[up_x[-1]])
    pos = {v: i for i, v in enumerate(up_x)}
    up_y = [y]
    while up_y[-1] not in pos:
        up_y.append(parent[up_y[-1]])
    lca = up_y[-1]
    return up_x[: pos[lca] + 1] + up_y[-2::-1]


def cycle_sign(sg: SignedGraph, cycle: list[int]) -> int:
    s = 1
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        s *= sg.edges[(min(a, b), max(a, b))]
    return s


def switching_equivalent(sg1: SignedGraph, sg2: SignedGraph) -> bool:
    if sg1.n != sg2.n or set(sg1.edges) != set(sg2.edges):
        raise ValueError("switching equivalence needs the same underlying graph")
    prod = SignedGraph(sg1.n, {e: s * sg2.edges[e] for e, s in sg1.edges.items()})
    return is_balanced(prod).balanced


def switch(sg: SignedGraph, assignment) -> SignedGraph:
    """Apply the diagonal switching given by a per-vertex +-1 list."""
    edges = {(i, j): s * assignment[i] * assignment[j] for (i, j), s in sg.edges.items()}
    return SignedGraph(sg.n, edges, sg.loops, sg.labels)


# -- irreducibility ----------------------------------------------------------------


def _components(sg: SignedGraph) -> list[list[int]]:
    return Graph(sg.n, tuple(sg.edges)).components()


def is_irreducible(og: OrientedGraph, t: TriangleSet) -> bool:
    if og.m < 1:
        raise ValueError("irreducibility needs at least one edge")
    return len(_components(lambda_signed(og, t))) == 1


def reducibility_partition(og: OrientedGraph, t: TriangleSet) -> tuple[list[int], list[int]] | None:
    """``(E1, E2)`` as edge-index lists when the Helmholtzian is reducible.

    ``E1`` is the smallest connected piece of the signed edge graph (first by
    index on ties) and ``E2`` everything else.
    """
    if og.m < 2:
        raise ValueError("a partition needs at least two edges")
    comps = _components(lambda_signed(og, t))
    if len(comps) == 1:
        return None
    first = min(comps, key=lambda c: (len(c), c[0]))
    rest = sorted(set(range(og.m)) - set(first))
    return first, rest


# -- cycles ----------------------------------------------------------------------


def induced_cycles(g: Graph) -> Iterator[list[int]]:
    """Every chordless cycle of length >= 3 once, starting at its minimum vertex.

    Depth-first search over induced paths whose interior vertices all exceed
    the start vertex; each cycle appears in both directions, so only the one
    with ``second < last`` is yielded.
    """
    adj = [set(g.neighbors(v)) for v in range(g.n)]

    def extend(path: list[int]):
        s, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= s or v in path:
                continue
            # v may touch only `last` among the interior path vertices
            if any(v in adj[u] for u in path[1:-1]):
                continue
            if s in adj[v]:
                if len(path) >= 2 and path[1] < v:
                    yield path + [v]
                continue
            yield from extend(path + [v])

    for s in range(g.n):
        for v in sorted(adj[s]):
            if v > s:
                yield from extend([s, v])


def induced_odd_cycle_ge5(g: Graph) -> list[int] | None:
    for cyc in induced_cycles(g):
        if len(cyc) >= 5 and len(cyc) % 2:
            return cyc
    return None


def odd_cycle_ge5(g: Graph) -> list[int] | None:
    """Any simple odd cycle of length >= 5 (not necessarily induced)."""
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]

    def dfs(path: list[int], on: set[int]):
        s, last = path[0], path[-1]
        for v in adj[last]:
            if v == s and len(path) >= 5 and len(path) % 2:
                return list(path)
            if v > s and v not in on:
                on.add(v)
                path.append(v)
                found = dfs(path, on)
                if found:
                    return found
                path.pop()
                on.discard(v)
        return None

    for s in range(g.n):
        found = dfs([s], {s})
        if found:
            return found
    return None


# -- nonnegative orientations --------------------------------------------------------


@dataclass
class OrientationSearchResult:
    found: bool
    orientation: OrientedGraph | None = None
    obstruction: list[int] | None = None
    certificate: SwitchingCertificate | None = None

    @property
    def note(self) -> str:
        if self.found:
            return "nonnegative orientation found"
        if self.obstruction:
            return "unbalanced; induced odd cycle " + "-".join(map(str, self.obstruction))
        return "unbalanced, no induced obstruction located"


def find_nonnegative_orientation(g: Graph) -> OrientationSearchResult:
    og = default_orientation(g)
    t = enumerate_triangles(g)
    cert = is_balanced(lambda_signed(og, t).reduced())
    if not cert.balanced:
        return OrientationSearchResult(False, None, induced_odd_cycle_ge5(g), cert)
    flipped = orient(g, [s < 0 for s in cert.assignment])
    H = helmholtzian_direct(flipped, t)
    if (H < 0).any():
        raise ConsistencyError("balanced certificate produced a Helmholtzian with a negative entry")
    return OrientationSearchResult(True, flipped, None, cert)


def nonnegative_orientations_bruteforce(g: Graph) -> Iterator[OrientedGraph]:
    """All orientations whose Helmholtzian is entrywise >= 0 (2^m candidates)."""
    t = enumerate_triangles(g)
    for flips in product((False, True), repeat=g.m):
        og = orient(g, flips)
        if not (helmholtzian_direct(og, t) < 0).any():
            yield og


def has_nonnegative_orientation_bruteforce(g: Graph) -> bool:
    return next(nonnegative_orientations_bruteforce(g), None) is not None


# -- graph surgery -------------------------------------------------------------------


def add_twin(g: Graph, v: int, cotwin: bool = False) -> Graph:
    """Append vertex ``n`` copying the neighbourhood of ``v`` (plus edge ``v-n`` for a co-twin)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    new = g.n
    edges = list(g.edges) + [(u, new) for u in sorted(g.neighbors(v))]
    if cotwin:
        edges.append((v, new))
    return Graph(g.n + 1, tuple(edges))


def twin_eigenvalue_targets(g: Graph, v: int, cotwin: bool) -> list[int]:
    """Triangle degree (in ``g``) + 1 for a twin, + 3 for a co-twin, per edge at ``v``."""
    deg = triangle_degrees(g, enumerate_triangles(g))
    shift = 3 if cotwin else 1
    return [int(deg[i]) + shift for i, e in enumerate(g.edges) if v in e]


# -- signed graph text format -----------------------------------------------------


def format_signed(sg: SignedGraph) -> str:
    lines = [f"{sg.n} {len(sg.edges)}"]
    for (i, j), s in sorted(sg.edges.items()):
        lines.append(f"{i} {j} {'+' if s > 0 else '-'}")
    for v, w in enumerate(sg.loops):
        lines.append(f"loop {v} {w}")
    return "\n".join(lines) + "\n"


def parse_signed(text: str) -> SignedGraph:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise ValueError("signed graph text must start with 'n m'")
    n, m = (int(x) for x in rows[0])
    edges: dict[tuple[int, int], int] = {}
    loops = [0] * n
    has_loops = False
    for r in rows[1:]:
        if r[0] == "loop":
            loops[int(r[1])] = int(r[2])
            has_loops = True
            continue
        if len(r) != 3 or r[2] not in "+-":
            raise ValueError(f"bad signed edge line {' '.join(r)!r}")
        i, j = int(r[0]), int(r[1])
        key = (min(i, j), max(i, j))
        if key in edges:
            raise ValueError(f"duplicate signed edge {key}")
        edges[key] = 1 if r[2] == "+" else -1
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    return SignedGraph(n, edges, tuple(loops) if has_loops else ())


def is_entrywise_nonnegative(M) -> bool:
    return not (np.asarray(M) < 0).any()
