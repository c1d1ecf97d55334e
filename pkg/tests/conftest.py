import random

import pytest
from hypothesis import strategies as st

from higher_ind.graphs import Graph


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the stretch tier (large grid entries)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: stretch tier, only with --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="stretch tier, pass --slow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
