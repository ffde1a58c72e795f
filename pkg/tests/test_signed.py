import random
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from hspec import families
from hspec.graph import (
    Graph,
    all_graphs_up_to,
    default_orientation,
    enumerate_triangles,
    orient,
    parse_graph6,
)
from hspec.incidence import SignedGraph, helmholtzian_direct, lambda_signed
from hspec.signed import (
    add_twin,
    cycle_sign,
    find_nonnegative_orientation,
    has_nonnegative_orientation_bruteforce,
    induced_cycles,
    induced_odd_cycle_ge5,
    is_balanced,
    is_irreducible,
    odd_cycle_ge5,
    parse_signed,
    format_signed,
    reducibility_partition,
    switch,
    switching_equivalent,
    twin_eigenvalue_targets,
)
from hspec.spectra import compare_multisets, h_eigenvalues

from conftest import graphs


def _signed_cycle(n, negatives=()):
    edges = {}
    for i in range(n):
        a, b = sorted((i, (i + 1) % n))
        edges[(a, b)] = -1 if i in negatives else 1
    return SignedGraph(n, edges)


def _lambda(og):
    return lambda_signed(og, enumerate_triangles(og.graph)).reduced()


def _assert_certificate_sound(sg, cert):
    if cert.balanced:
        for (x, y), s in sg.edges.items():
            assert cert.assignment[x] * s * cert.assignment[y] == 1
    else:
        assert cycle_sign(sg, cert.witness_cycle) == -1


# -- balance -------------------------------------------------------------------


def test_positive_triangle_balanced():
    cert = is_balanced(_signed_cycle(3))
    assert cert.balanced and cert.assignment == [1, 1, 1]


def test_c5_one_negative_edge_witness():
    sg = _signed_cycle(5, negatives=(2,))
    cert = is_balanced(sg)
    assert not cert.balanced
    assert sorted(cert.witness_cycle) == [0, 1, 2, 3, 4]
    _assert_certificate_sound(sg, cert)


def test_two_negative_edges_balance():
    sg = _signed_cycle(4, negatives=(0, 2))
    cert = is_balanced(sg)
    assert cert.balanced
    _assert_certificate_sound(sg, cert)


def test_lambda_fig2_g1_balanced():
    assert is_balanced(_lambda(families.fig2_g1())).balanced


def test_lambda_fig2_graphs_switching_equivalent():
    a, b = _lambda(families.fig2_g1()), _lambda(families.fig2_g2())
    assert switching_equivalent(a, b)


def test_lambda_fig2_g2_computed_signs():
    lam = _lambda(families.fig2_g2())
    assert lam.positive_edges() == [(0, 3), (0, 4), (0, 5), (1, 2), (3, 4), (3, 5)]
    assert lam.negative_edges() == [(0, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]


def _drawn(pos, neg, n=9):
    edges = {}
    for pairs, sign in ((pos, 1), (neg, -1)):
        for a, b in pairs:
            edges[(min(a, b) - 1, max(a, b) - 1)] = sign
    return SignedGraph(n, edges)


def test_drawn_fig2_g2_signing_has_a_negative_triangle():
    drawn = _drawn(families.FIG2_LAMBDA_G2_POSITIVE, families.FIG2_LAMBDA_G2_NEGATIVE)
    # e1, e3, e5 all meet at the hub, so every triangle of Lambda_R must be positive
    assert cycle_sign(drawn, [0, 2, 4]) == -1
    computed = _lambda(families.fig2_g2())
    assert cycle_sign(computed, [0, 2, 4]) == 1
    for (a, b, c) in combinations(range(6), 3):
        if all(p in computed.edges for p in ((a, b), (b, c), (a, c))):
            assert cycle_sign(computed, [a, b, c]) == 1


def test_drawn_fig2_g1_matches_computed():
    drawn = _drawn(families.FIG2_LAMBDA_G1_POSITIVE, families.FIG2_LAMBDA_G1_NEGATIVE)
    assert drawn.edges == _lambda(families.fig2_g1()).edges


def test_c4_positive_vs_one_negative():
    assert not switching_equivalent(_signed_cycle(4), _signed_cycle(4, negatives=(1,)))
    assert switching_equivalent(_signed_cycle(4), _signed_cycle(4))


def test_switching_equivalent_requires_same_support():
    with pytest.raises(ValueError):
        switching_equivalent(_signed_cycle(4), _signed_cycle(5))


def _random_signing(base, rng):
    return SignedGraph(base.n, {e: rng.choice((1, -1)) for e in base.edges})


def test_switching_equivalence_relation():
    rng = random.Random(7)
    base = parse_graph6("E~~w")  # K6 minus an edge
    support = SignedGraph(base.n, {e: 1 for e in base.edges})
    for _ in range(50):
        a, b = _random_signing(support, rng), _random_signing(support, rng)
        s = [rng.choice((1, -1)) for _ in range(base.n)]
        c = switch(a, s)
        assert switching_equivalent(a, a)
        assert switching_equivalent(a, b) == switching_equivalent(b, a)
        assert switching_equivalent(a, c) and switching_equivalent(c, a)
        # transitivity through c
        assert switching_equivalent(c, b) == switching_equivalent(a, b)


@given(graphs(n_max=7, min_edges=1))
def test_certificates_sound_on_lambda(g):
    sg = _lambda(default_orientation(g))
    _assert_certificate_sound(sg, is_balanced(sg))


# -- irreducibility -------------------------------------------------------------


def _ot(g):
    return default_orientation(g), enumerate_triangles(g)


def test_irreducibility_examples():
    og = families.fig1()
    assert not is_irreducible(og, enumerate_triangles(og.graph))
    assert is_irreducible(*_ot(families.path(3)))
    assert not is_irreducible(*_ot(families.complete(3)))


def test_partition_fig1():
    og = families.fig1()
    e1, e2 = reducibility_partition(og, enumerate_triangles(og.graph))
    assert e1 == [3, 4] and e2 == [0, 1, 2, 5]
    H = helmholtzian_direct(og, enumerate_triangles(og.graph))
    assert not H[np.ix_(e1, e2)].any()


def test_partition_two_disjoint_edges():
    assert reducibility_partition(*_ot(Graph(4, ((0, 1), (2, 3))))) == ([0], [1])
    assert reducibility_partition(*_ot(families.path(4))) is None


@given(graphs(n_max=7, min_edges=2))
def test_irreducible_iff_h_irreducible(g):
    og, t = _ot(g)
    H = helmholtzian_direct(og, t)
    G = nx.from_numpy_array((H != 0).astype(int) - np.eye(g.m, dtype=int))
    assert is_irreducible(og, t) == nx.is_connected(G)


# -- cycles ---------------------------------------------------------------------


def test_induced_cycles_c5():
    assert induced_odd_cycle_ge5(families.cycle(5)) is not None
    assert sorted(induced_odd_cycle_ge5(families.cycle(5))) == [0, 1, 2, 3, 4]


def test_c5_with_chord():
    g = Graph(5, families.cycle(5).edges + ((0, 2),))
    lengths = sorted(len(c) for c in induced_cycles(g))
    assert lengths == [3, 4]
    assert induced_odd_cycle_ge5(g) is None
    assert odd_cycle_ge5(g) is not None


def test_induced_cycles_match_networkx():
    for g in all_graphs_up_to(6, n_min=6):
        ours = sorted(sorted(c) for c in induced_cycles(g))
        G = nx.Graph(list(g.edges))
        G.add_nodes_from(range(g.n))
        theirs = sorted(sorted(c) for c in nx.chordless_cycles(G) if len(c) >= 3)
        assert ours == theirs


# -- nonnegative orientation ----------------------------------------------------


def test_friendship_found():
    for n in range(1, 5):
        res = find_nonnegative_orientation(families.friendship(n))
        assert res.found
        H = helmholtzian_direct(res.orientation, enumerate_triangles(res.orientation.graph))
        assert (H >= 0).all()


@pytest.mark.parametrize("n", [5, 7])
def test_odd_cycles_not_found(n):
    g = families.cycle(n)
    res = find_nonnegative_orientation(g)
    assert not res.found and len(res.obstruction) == n
    assert not has_nonnegative_orientation_bruteforce(g)


def test_found_iff_balanced_exhaustive_n6():
    for g in all_graphs_up_to(6):
        res = find_nonnegative_orientation(g)
        assert res.found == is_balanced(_lambda(default_orientation(g))).balanced
        if res.found:
            H = helmholtzian_direct(res.orientation, enumerate_triangles(g))
            assert H.dtype.kind == "i" and (H >= 0).all()


def test_induced_odd_cycle_blocks_every_orientation_n5():
    seen = 0
    for g in all_graphs_up_to(5):
        if induced_odd_cycle_ge5(g) is not None:
            assert not has_nonnegative_orientation_bruteforce(g)
            seen += 1
    assert seen > 0


def test_bruteforce_agrees_with_search_n5():
    for g in all_graphs_up_to(5):
        if g.m <= 7:
            assert has_nonnegative_orientation_bruteforce(g) == find_nonnegative_orientation(g).found


def test_net_graph_breaks_the_claimed_converse():
    # triangle with a pendant edge at each corner: no cycle longer than 3
    net = Graph(6, ((0, 1), (0, 2), (1, 2), (2, 3), (1, 4), (0, 5)))
    assert odd_cycle_ge5(net) is None
    assert not find_nonnegative_orientation(net).found
    assert not has_nonnegative_orientation_bruteforce(net)


# -- twins ------------------------------------------------------------------------


def test_add_twin_examples():
    g = add_twin(Graph(2), 1)
    assert g.n == 3 and g.m == 0
    assert set(add_twin(families.complete(2), 0, cotwin=True).edges) == set(families.complete(3).edges)
    k23 = add_twin(families.star(3), 0)
    assert nx.is_isomorphic(nx.Graph(list(k23.edges)), nx.complete_bipartite_graph(2, 3))
    with pytest.raises(ValueError):
        add_twin(Graph(2), 2)


def _contains(spectrum, targets, tol=1e-7):
    """Multiset containment: every target matched by a distinct eigenvalue."""
    pool = list(spectrum)
    for t in targets:
        hit = next((i for i, x in enumerate(pool) if abs(x - t) < tol), None)
        if hit is None:
            return False
        pool.pop(hit)
    return True


def _simplicial(g, v):
    return all(g.has_edge(a, b) for a, b in combinations(sorted(g.neighbors(v)), 2))


def test_twin_targets_when_neighbourhood_is_clique():
    checked = 0
    for g in all_graphs_up_to(5):
        for v in range(g.n):
            if not _simplicial(g, v):
                continue
            for cotwin in (False, True):
                h = add_twin(g, v, cotwin)
                spec = h_eigenvalues(h) if h.m else []
                assert _contains(spec, twin_eigenvalue_targets(g, v, cotwin)), (g, v, cotwin)
                checked += 1
    assert checked > 1000


def test_twin_claim_fails_for_path_centre():
    # twin of the middle of P3 is C4, whose H-spectrum {4, 2, 2, 0} has no 1
    p3 = families.path(3)
    assert twin_eigenvalue_targets(p3, 1, False) == [1, 1]
    c4 = add_twin(p3, 1)
    assert compare_multisets(h_eigenvalues(c4), [4, 2, 2, 0], 1e-8).ok


# -- text format ------------------------------------------------------------------


def test_signed_text_roundtrip():
    og = families.fig1()
    lam = lambda_signed(og, enumerate_triangles(og.graph))
    back = parse_signed(format_signed(lam))
    assert back.edges == lam.edges and back.loops == lam.loops


@pytest.mark.parametrize("text", ["", "3", "2 1\n0 1 x", "2 2\n0 1 +", "2 2\n0 1 +\n1 0 -"])
def test_signed_text_errors(text):
    with pytest.raises(ValueError):
        parse_signed(text)


def test_orient_flips():
    g = families.path(3)
    assert orient(g, [True, False]).arcs == ((1, 0), (1, 2))
