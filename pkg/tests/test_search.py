import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesys.search import clique_number_bruteforce, default_workers, max_clique


def random_adj(n, p, rng):
    adj = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def is_clique(adj, vs):
    return all(adj[a] >> b & 1 for a, b in itertools.combinations(vs, 2))


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return random_adj(n, draw(st.floats(0, 1)), rng)


def test_empty_and_singleton():
    assert max_clique([]) == []
    assert max_clique([0]) == [0]


def test_complete_graph():
    n = 7
    adj = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    assert max_clique(adj) == list(range(n))


def test_five_cycle():
    adj = [0] * 5
    for i in range(5):
        j = (i + 1) % 5
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    assert len(max_clique(adj)) == 2


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        max_clique([1])


@given(graphs())
def test_matches_bruteforce(adj):
    clique = max_clique(adj)
    assert is_clique(adj, clique)
    assert len(clique) == clique_number_bruteforce(adj)


@given(graphs(), st.integers(1, 6))
def test_stop_at_returns_valid_clique(adj, stop):
    clique = max_clique(adj, stop_at=stop)
    assert is_clique(adj, clique)
    omega = clique_number_bruteforce(adj)
    assert len(clique) == omega or len(clique) >= stop


@pytest.mark.parametrize("seed", range(5))
def test_networkx_oracle_larger(seed):
    rng = random.Random(seed)
    n = 40
    adj = random_adj(n, 0.5, rng)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1)
    assert len(max_clique(adj)) == max(len(c) for c in nx.find_cliques(G))


@settings(max_examples=5, deadline=None)
@given(graphs(max_n=12))
def test_parallel_agrees(adj):
    assert len(max_clique(adj, workers=2)) == len(max_clique(adj))


def test_default_workers(monkeypatch):
    monkeypatch.delenv("CURVESYS_THREADS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("CURVESYS_THREADS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("CURVESYS_THREADS", "lots")
    assert default_workers() == 1
