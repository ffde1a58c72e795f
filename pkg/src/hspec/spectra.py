"""Spectra of the Helmholtzian and the checks that relate them to L and G_tri."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import families
from .graph import (
    Graph,
    OrientedGraph,
    TriangleSet,
    all_graphs_up_to,
    default_orientation,
    encode_graph6,
    enumerate_triangles,
    triangle_degrees,
)
from .incidence import helmholtzian_direct, laplacian, triangular_signed
from .jacobi import sym_eigenvalues

TOL_GROUP = 1e-8
TOL_ZERO = 1e-7
TOL_MATCH = 1e-7
SLACK = 1e-8


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    tol_group: float = TOL_GROUP

    def __len__(self):
        return len(self.values)

    def to_json(self) -> dict:
        return {
            "eigenvalues": [float(x) for x in self.values],
            "groups": [{"value": float(v), "multiplicity": k} for v, k in self.groups],
            "tolerance": self.tol_group,
        }

    def format(self, digits: int = 6) -> str:
        if not self.groups:
            return "(empty)"
        return ", ".join(f"{_clean(v, digits)}:{k}" for v, k in self.groups)


def _clean(x: float, digits: int) -> str:
    r = round(x, digits)
    if r == 0:
        r = 0.0
    return f"{r:.{digits}f}".rstrip("0").rstrip(".")


def group_spectrum(values: Sequence[float], tol_group: float = TOL_GROUP) -> Spectrum:
    vals = [float(v) for v in values]
    if any(b > a for a, b in zip(vals, vals[1:])):
        raise ValueError("eigenvalues must be in descending order")
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v < tol_group:
            groups[-1].append(v)
        else:
            groups.append([v])
    return Spectrum(
        tuple(vals),
        tuple((sum(g) / len(g), len(g)) for g in groups),
        tol_group,
    )


def spectrum(M, tol_group: float = TOL_GROUP) -> Spectrum:
    return group_spectrum(sym_eigenvalues(M), tol_group)


def h_eigenvalues(g: Graph) -> np.ndarray:
    og = default_orientation(g)
    return sym_eigenvalues(helmholtzian_direct(og, enumerate_triangles(g)))


def laplacian_eigenvalues(g: Graph) -> np.ndarray:
    return sym_eigenvalues(laplacian(default_orientation(g)))


def closed_form_spectrum(family: str, n: int, tol_group: float = TOL_GROUP) -> Spectrum:
    """Closed-form H-spectrum of K_n, P_n, C_n or the friendship graph on n blades."""
    if family == "complete":
        if n < 2:
            raise ValueError("complete graph needs n >= 2")
        vals = [float(n)] * math.comb(n, 2)
    elif family == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        vals = [2 * math.cos(j * math.pi / n) + 2 for j in range(1, n)]
    elif family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        if n == 3:
            vals = [3.0] * 3
        elif n % 2 == 0:
            # nonzero Laplacian eigenvalues of C_n, plus a single zero
            vals = [2 - 2 * math.cos(2 * math.pi * j / n) for j in range(1, n)] + [0.0]
        else:
            vals = [0.0]
            for j in range(1, n - 1, 2):
                vals += [2 * math.cos(j * math.pi / n) + 2] * 2
    elif family == "friendship":
        if n < 1:
            raise ValueError("friendship graph needs n >= 1")
        vals = [2.0 * n + 1] + [3.0] * (2 * n) + [1.0] * (n - 1)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(families.FAMILIES)}")
    return group_spectrum(sorted(vals, reverse=True), tol_group)


# -- multiset comparison ---------------------------------------------------------


@dataclass
class MultisetDiff:
    left_only: list[float] = field(default_factory=list)
    right_only: list[float] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.left_only and not self.right_only

    def __bool__(self):
        return self.ok


def compare_multisets(a: Iterable[float], b: Iterable[float], tol: float = TOL_MATCH) -> MultisetDiff:
    """Greedy pairing of two sorted lists; values within ``tol`` are matched."""
    xs = sorted(a, reverse=True)
    ys = sorted(b, reverse=True)
    diff = MultisetDiff()
    i = j = 0
    while i < len(xs) and j < len(ys):
        if abs(xs[i] - ys[j]) <= tol:
            i += 1
            j += 1
        elif xs[i] > ys[j]:
            diff.left_only.append(float(xs[i]))
            i += 1
        else:
            diff.right_only.append(float(ys[j]))
            j += 1
    diff.left_only += [float(x) for x in xs[i:]]
    diff.right_only += [float(y) for y in ys[j:]]
    return diff


def nonzero(values: Iterable[float], tol_zero: float = TOL_ZERO) -> list[float]:
    return [float(v) for v in values if abs(v) > tol_zero]


# -- interlacing -----------------------------------------------------------------


@dataclass
class InterlacingReport:
    subset: tuple[int, ...]
    kappa: list[int]
    kappa_min: int | None
    kappa_max: int | None
    eigenvalues: list[float]
    sub_eigenvalues: list[float]
    lower: list[bool]
    upper: list[bool]

    @property
    def passed(self) -> bool:
        return all(self.lower) and all(self.upper)


def interlacing_check(g: Graph, subset: Iterable[int], slack: float = SLACK) -> InterlacingReport:
    """Compare H-spectra of ``g`` and its induced subgraph on ``subset``.

    Checks ``lam[i] >= lam'[i] + kappa_min`` and ``lam'[i] + kappa_max >= lam[m-m'+i]``.
    """
    subset = tuple(sorted(set(subset)))
    if not subset:
        raise ValueError("subset must be nonempty")
    sub, parent_idx = g.induced(subset)
    tri = enumerate_triangles(g)
    lam = [float(x) for x in sym_eigenvalues(helmholtzian_direct(default_orientation(g), tri))]
    if sub.m == 0:
        return InterlacingReport(subset, [], None, None, lam, [], [], [])
    sub_tri = enumerate_triangles(sub)
    lam_sub = [float(x) for x in sym_eigenvalues(helmholtzian_direct(default_orientation(sub), sub_tri))]
    deg_g = triangle_degrees(g, tri)
    deg_sub = triangle_degrees(sub, sub_tri)
    kappa = [int(deg_g[p] - deg_sub[i]) for i, p in enumerate(parent_idx)]
    kmin, kmax = min(kappa), max(kappa)
    m, ms = len(lam), len(lam_sub)
    lower = [lam[i] >= lam_sub[i] + kmin - slack for i in range(ms)]
    upper = [lam_sub[i] + kmax >= lam[m - ms + i] - slack for i in range(ms)]
    return InterlacingReport(subset, kappa, kmin, kmax, lam, lam_sub, lower, upper)


# -- block decomposition and bounds ----------------------------------------------


@dataclass
class BlockSpectrumReport:
    h_nonzero: list[float]
    laplacian_nonzero: list[float]
    triangle_nonzero: list[float]
    diff: MultisetDiff

    @property
    def passed(self) -> bool:
        return self.diff.ok

    def __bool__(self):
        return self.passed


def verify_block_spectrum(og: OrientedGraph, t: TriangleSet, tol_zero: float = TOL_ZERO,
                          tol_match: float = TOL_MATCH) -> BlockSpectrumReport:
    h = nonzero(sym_eigenvalues(helmholtzian_direct(og, t)), tol_zero)
    mu = nonzero(sym_eigenvalues(laplacian(og)), tol_zero)
    eta = sym_eigenvalues(triangular_signed(og, t).adjacency())
    shifted = nonzero([3.0 + x for x in eta], tol_zero)
    return BlockSpectrumReport(h, mu, shifted, compare_multisets(h, mu + shifted, tol_match))


def largest_eigenvalue_bound_check(og: OrientedGraph, t: TriangleSet, slack: float = SLACK) -> bool:
    """lambda_1(H) <= max(mu_1, 3 * max triangle degree)."""
    if og.m < 1:
        raise ValueError("need at least one edge")
    lam1 = sym_eigenvalues(helmholtzian_direct(og, t))[0]
    mu1 = sym_eigenvalues(laplacian(og))[0]
    tmax = int(triangle_degrees(og.graph, t).max())
    return bool(lam1 <= max(mu1, 3 * tmax) + slack)


class CliqueError(ValueError):
    pass


def clique_eigenvalue_bound(g: Graph, cliques: Sequence[Iterable[int]],
                            h_values: Sequence[float] | None = None) -> tuple[Fraction, bool]:
    """Bound sum C(s,3)/(1+3(s-3)) over edge-disjoint cliques, and whether
    the number of H-eigenvalues >= 3 reaches it."""
    used: set[tuple[int, int]] = set()
    bound = Fraction(0)
    for clique in cliques:
        vs = sorted(set(clique))
        s = len(vs)
        if s < 3:
            raise CliqueError(f"clique {vs} has fewer than 3 vertices")
        pairs = list(combinations(vs, 2))
        missing = [p for p in pairs if not g.has_edge(*p)]
        if missing:
            raise CliqueError(f"{vs} is not a clique: missing edge {missing[0]}")
        overlap = used.intersection(pairs)
        if overlap:
            raise CliqueError(f"clique {vs} shares edge {min(overlap)} with an earlier clique")
        used.update(pairs)
        bound += Fraction(math.comb(s, 3), 1 + 3 * (s - 3))
    if h_values is None:
        h_values = h_eigenvalues(g)
    count = sum(1 for x in h_values if x >= 3 - SLACK)
    return bound, count >= bound


def greedy_edge_disjoint_cliques(g: Graph, sizes: Sequence[int] = (4, 3)) -> list[tuple[int, ...]]:
    """Pick cliques of the given sizes in order, lexicographically, never reusing an edge."""
    used: set[tuple[int, int]] = set()
    out = []
    for s in sizes:
        for vs in combinations(range(g.n), s):
            pairs = list(combinations(vs, 2))
            if all(g.has_edge(*p) for p in pairs) and used.isdisjoint(pairs):
                used.update(pairs)
                out.append(vs)
    return out


# -- lambda_1 = mu_1 survey --------------------------------------------------------


@dataclass(frozen=True)
class SurveyViolation:
    graph6: str
    lambda1: float
    mu1: float

    def line(self) -> str:
        return f"{self.graph6} {self.lambda1!r} {self.mu1!r}"


def largest_pair(g: Graph) -> tuple[float, float]:
    og = default_orientation(g)
    lam1 = sym_eigenvalues(helmholtzian_direct(og, enumerate_triangles(g)))[0]
    mu1 = sym_eigenvalues(laplacian(og))[0]
    return float(lam1), float(mu1)


def conjecture_survey(n_max: int, tol: float = TOL_ZERO, graphs: Iterable[Graph] | None = None) -> list[SurveyViolation]:
    """Graphs (with at least one edge) where lambda_1(H) and mu_1(L) differ by more than ``tol``."""
    if graphs is None:
        graphs = all_graphs_up_to(n_max)
    out = []
    for g in graphs:
        if g.m == 0:
            continue
        lam1, mu1 = largest_pair(g)
        if abs(lam1 - mu1) > tol:
            out.append(SurveyViolation(encode_graph6(g), lam1, mu1))
    return out
