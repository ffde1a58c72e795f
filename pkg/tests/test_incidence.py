import random

import numpy as np
import pytest
from hypothesis import given

from hspec import families
from hspec.graph import (
    Graph,
    all_graphs_up_to,
    default_orientation,
    enumerate_triangles,
    flip_edge,
    random_orientation,
    triangle_degrees,
)
from hspec.incidence import (
    ConsistencyError,
    edge_vertex_incidence,
    helmholtzian_direct,
    helmholtzian_product,
    hprime,
    lambda_signed,
    laplacian,
    matrix_to_json,
    matrix_to_text,
    triangle_edge_incidence,
    triangular_signed,
)

from conftest import oriented_graphs


def _ot(g):
    return default_orientation(g), enumerate_triangles(g)


def test_fig1_incidence_matrices():
    og, t = families.fig1(), families.fig1_triangles()
    assert np.array_equal(edge_vertex_incidence(og), families.FIG1_B)
    assert np.array_equal(triangle_edge_incidence(og, t), families.FIG1_C)


def test_fig1_default_triangle_orientation_flips_rows_only():
    og = families.fig1()
    C = triangle_edge_incidence(og, enumerate_triangles(og.graph))
    printed = np.array(families.FIG1_C)
    for row, ref in zip(C, printed):
        assert np.array_equal(row, ref) or np.array_equal(row, -ref)
    assert np.array_equal(C.T @ C, printed.T @ printed)


def test_fig1_helmholtzian_both_ways():
    og, t = families.fig1(), families.fig1_triangles()
    assert np.array_equal(helmholtzian_direct(og, t), families.FIG1_H)
    assert np.array_equal(helmholtzian_product(og, t), families.FIG1_H)


def test_small_matrices():
    og = default_orientation(Graph(2, ((0, 1),)))
    t = enumerate_triangles(og.graph)
    assert edge_vertex_incidence(og).tolist() == [[-1, 1]]
    assert laplacian(og).tolist() == [[1, -1], [-1, 1]]
    assert helmholtzian_direct(og, t).tolist() == [[2]]
    assert triangle_edge_incidence(og, t).shape == (0, 1)


def test_k3_is_3i_any_orientation():
    g = families.complete(3)
    t = enumerate_triangles(g)
    rng = random.Random(1)
    for _ in range(8):
        og = random_orientation(g, rng)
        assert np.array_equal(helmholtzian_direct(og, t), 3 * np.eye(3))


def test_path3_laplacian():
    og, _ = _ot(families.path(3))
    L = laplacian(og)
    assert np.array_equal(L, np.diag([1, 2, 1]) - families.path(3).adjacency())
    # char. poly x(x-1)(x-3)
    assert np.allclose(np.linalg.eigvalsh(L), [0, 1, 3])


def test_fig1_laplacian():
    L = laplacian(families.fig1())
    assert list(np.diag(L)) == [1, 4, 2, 3, 2]
    assert np.allclose(np.linalg.eigvalsh(L), [0, 1, 2, 4, 5])


@given(oriented_graphs(n_max=7))
def test_incidence_row_structure(og):
    t = enumerate_triangles(og.graph)
    B = edge_vertex_incidence(og)
    C = triangle_edge_incidence(og, t)
    assert not B.sum(axis=1).any()
    assert ((B != 0).sum(axis=1) == 2).all()
    assert ((C != 0).sum(axis=1) == 3).all()
    L = laplacian(og)
    assert not L.sum(axis=1).any()
    assert np.array_equal(L, np.diag(og.graph.degrees()) - og.graph.adjacency())


@given(oriented_graphs(n_max=7))
def test_direct_equals_product(og):
    t = enumerate_triangles(og.graph)
    assert np.array_equal(helmholtzian_direct(og, t), helmholtzian_product(og, t))


def test_direct_equals_product_exhaustive_n6():
    for g in all_graphs_up_to(6):
        og, t = _ot(g)
        assert np.array_equal(helmholtzian_direct(og, t), helmholtzian_product(og, t))


def test_direct_equals_product_random_orientations_n5():
    rng = random.Random(5)
    for g in all_graphs_up_to(5, n_min=5):
        t = enumerate_triangles(g)
        for _ in range(100 if g.m >= 8 else 10):
            og = random_orientation(g, rng)
            assert np.array_equal(helmholtzian_direct(og, t), helmholtzian_product(og, t))


def test_triangle_orientation_does_not_change_h():
    og = families.fig1()
    t = enumerate_triangles(og.graph)
    for orient in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        t2 = t.with_orientation(orient)
        assert np.array_equal(helmholtzian_product(og, t2), families.FIG1_H)


@given(oriented_graphs(n_max=7))
def test_signed_decomposition(og):
    t = enumerate_triangles(og.graph)
    lam = lambda_signed(og, t)
    D = np.diag(triangle_degrees(og.graph, t) + 2)
    assert np.array_equal(helmholtzian_direct(og, t), lam.adjacency() + D)
    assert all(w >= 2 for w in lam.loops)


def test_lambda_k3_edgeless():
    og, t = _ot(families.complete(3))
    assert lambda_signed(og, t).edges == {}


def test_lambda_fig2_g1_matches_drawing():
    og = families.fig2_g1()
    lam = lambda_signed(og, enumerate_triangles(og.graph))
    assert lam.n == 9
    pos = sorted((a - 1, b - 1) if a < b else (b - 1, a - 1) for a, b in families.FIG2_LAMBDA_G1_POSITIVE)
    neg = sorted((a - 1, b - 1) if a < b else (b - 1, a - 1) for a, b in families.FIG2_LAMBDA_G1_NEGATIVE)
    assert lam.positive_edges() == pos
    assert lam.negative_edges() == neg
    touched = {v for e in lam.edges for v in e}
    assert touched == set(range(6))


def test_flip_is_switching_similarity_fig1():
    og = families.fig1()
    t = enumerate_triangles(og.graph)
    S = np.diag([-1, 1, 1, 1, 1, 1])
    H = helmholtzian_direct(og, t)
    assert np.array_equal(helmholtzian_direct(flip_edge(og, 0), t), S @ H @ S)


@given(oriented_graphs(min_edges=1))
def test_flip_is_switching_similarity(og):
    t = enumerate_triangles(og.graph)
    H = helmholtzian_direct(og, t)
    for e in range(og.m):
        S = np.ones(og.m, dtype=int)
        S[e] = -1
        assert np.array_equal(helmholtzian_direct(flip_edge(og, e), t), np.outer(S, S) * H)


def test_triangular_signed_fig1():
    og, t = families.fig1(), families.fig1_triangles()
    sg = triangular_signed(og, t)
    assert sg.edges == {(0, 1): 1}
    assert sg.adjacency().tolist() == [[0, 1], [1, 0]]
    C = triangle_edge_incidence(og, t)
    assert (C @ C.T)[0, 1] == 1


def test_triangular_signed_triangle_free():
    og, t = _ot(families.cycle(6))
    assert triangular_signed(og, t).n == 0


@given(oriented_graphs(n_max=7))
def test_cct_and_cb(og):
    t = enumerate_triangles(og.graph)
    C = triangle_edge_incidence(og, t)
    B = edge_vertex_incidence(og)
    assert not (C @ B).any()
    assert np.array_equal(C @ C.T, 3 * np.eye(len(t), dtype=int) + triangular_signed(og, t).adjacency())


def test_triangular_signed_ignores_edge_orientation():
    g = families.complete(5)
    t = enumerate_triangles(g)
    rng = random.Random(3)
    ref = triangular_signed(default_orientation(g), t).edges
    for _ in range(5):
        assert triangular_signed(random_orientation(g, rng), t).edges == ref


def test_hprime_fig1():
    og, t = families.fig1(), families.fig1_triangles()
    Hp = hprime(og, t)
    assert Hp.shape == (7, 7)
    assert not Hp[:5, 5:].any() and not Hp[5:, :5].any()
    assert np.array_equal(Hp[:5, :5], laplacian(og))
    assert Hp[5:, 5:].tolist() == [[3, 1], [1, 3]]


def test_hprime_triangle_free_is_laplacian():
    og, t = _ot(families.cycle(5))
    assert np.array_equal(hprime(og, t), laplacian(og))


def test_hprime_nonzero_spectrum_matches_h_exhaustive_n5():
    for g in all_graphs_up_to(5):
        if g.m == 0:
            continue
        og, t = _ot(g)
        a = np.linalg.eigvalsh(helmholtzian_direct(og, t))
        b = np.linalg.eigvalsh(hprime(og, t))
        assert np.allclose(sorted(a[np.abs(a) > 1e-7]), sorted(b[np.abs(b) > 1e-7]), atol=1e-8)


def test_hprime_detects_broken_orientation_convention(monkeypatch):
    import hspec.incidence as inc

    real = inc.triangle_edge_incidence

    def corrupted(og, t):
        C = real(og, t)
        C[0, np.flatnonzero(C[0])[0]] *= -1
        return C

    monkeypatch.setattr(inc, "triangle_edge_incidence", corrupted)
    with pytest.raises(ConsistencyError):
        hprime(families.fig1(), families.fig1_triangles())


def test_psd_exhaustive_n5():
    for g in all_graphs_up_to(5):
        if g.m:
            og, t = _ot(g)
            assert np.linalg.eigvalsh(helmholtzian_direct(og, t)).min() >= -1e-9


def test_matrix_export():
    og = families.fig1()
    H = helmholtzian_direct(og, enumerate_triangles(og.graph))
    text = matrix_to_text(H)
    assert text.splitlines()[0] == "2 1 -1 0 0 1"
    doc = matrix_to_json(H, ["a", "b", "c", "d", "e", "f"])
    assert doc["labels"][0] == "a" and doc["rows"][5] == [1, 0, 0, 0, 0, 4]
    assert matrix_to_text(np.zeros((0, 0))) == "0x0 matrix\n"
