"""Tally where the twin / co-twin eigenvalue containment holds.

For every labeled graph up to --nmax vertices and every vertex v, add a twin
(and separately a co-twin) of v and test whether the new H-spectrum contains
tri(e)+1 (resp. tri(e)+3) for each edge e at v, as a multiset.

The span of e_i - e_i' (edge at v minus its copy at the new vertex) is
H-invariant, and H restricted to it is diag(tri+1) + A(Lambda_R on the star
at v) for a twin.  Its eigenvalues are exactly tri(e)+1 when the edges at v
are pairwise co-triangular, i.e. when N(v) is a clique.  The script checks
that this is also where the containment holds in practice.
"""

import argparse
from collections import Counter
from itertools import combinations

from hspec.graph import all_graphs_up_to
from hspec.signed import add_twin, twin_eigenvalue_targets
from hspec.spectra import h_eigenvalues


def contains(spectrum, targets, tol=1e-7):
    pool = list(spectrum)
    for t in targets:
        hit = next((i for i, x in enumerate(pool) if abs(x - t) < tol), None)
        if hit is None:
            return False
        pool.pop(hit)
    return True


def simplicial(g, v):
    return all(g.has_edge(a, b) for a, b in combinations(sorted(g.neighbors(v)), 2))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--show", type=int, default=5, help="print this many failing cases")
    args = ap.parse_args()

    table = Counter()
    shown = 0
    for g in all_graphs_up_to(args.nmax):
        for v in range(g.n):
            for cotwin in (False, True):
                targets = twin_eigenvalue_targets(g, v, cotwin)
                h = add_twin(g, v, cotwin)
                ok = contains(h_eigenvalues(h) if h.m else [], targets)
                table[("co-twin" if cotwin else "twin", simplicial(g, v), ok)] += 1
                if not ok and shown < args.show:
                    shown += 1
                    print(f"fail: edges={list(g.edges)} v={v} {'co-twin' if cotwin else 'twin'} "
                          f"targets={targets}")
    print()
    print(f"{'kind':<8} {'N(v) clique':<12} {'contains':<9} count")
    for (kind, simp, ok), c in sorted(table.items()):
        print(f"{kind:<8} {str(simp):<12} {str(ok):<9} {c}")
    total = sum(table.values())
    fails = sum(c for (_, _, ok), c in table.items() if not ok)
    print(f"\n{fails} of {total} cases fail")


if __name__ == "__main__":
    main()
