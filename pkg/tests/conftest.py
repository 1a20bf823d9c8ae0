import random

import pytest

from k2hypo.graph import Graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run long reproduction tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long-running; pass --runslow to include")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture
def rng():
    return random.Random(20261015)
