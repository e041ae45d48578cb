import random
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mvsets import graphcore as gc

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if connected:
        # a random spanning tree guarantees connectivity
        seed = draw(st.integers(0, 2**16))
        rng = random.Random(seed)
        for v in range(1, n):
            edges.append((rng.randrange(v), v))
    return gc.from_edge_list(n, set(tuple(sorted(e)) for e in edges))


def connected_graphs(min_n=1, max_n=8):
    return graphs(min_n, max_n, connected=True)


@st.composite
def graph_and_subset(draw, min_n=1, max_n=8, connected=True):
    G = draw(graphs(min_n, max_n, connected=connected))
    X = draw(st.integers(0, (1 << G.n) - 1))
    return G, X


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
