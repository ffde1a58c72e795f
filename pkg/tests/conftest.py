import hypothesis
import hypothesis.strategies as st
import pytest

from hspec.graph import Graph, graph_from_mask, orient

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, n_min=1, n_max=6, min_edges=0):
    n = draw(st.integers(n_min, n_max))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << npairs) - 1))
    g = graph_from_mask(n, mask)
    hypothesis.assume(g.m >= min_edges)
    return g


@st.composite
def oriented_graphs(draw, n_max=6, min_edges=0):
    g = draw(graphs(n_max=n_max, min_edges=min_edges))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    return orient(g, flips)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {title}")
