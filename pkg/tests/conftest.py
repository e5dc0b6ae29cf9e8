"""Shared fixtures: named graphs and cached small-graph enumerations."""

import itertools

import pytest

from chordpack.graph import Graph, from_edge_list
from chordpack.extremal import complete_multipartite
from chordpack.smallgraphs import canonical_graphs


def complete(n):
    return complete_multipartite([1] * n)


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture(scope="session")
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def k55():
    return complete_multipartite([5, 5])


@pytest.fixture(scope="session")
def k441():
    return complete_multipartite([4, 4, 1])


@pytest.fixture(scope="session")
def all_graphs_n7():
    """Every isomorphism class on 1..7 vertices."""
    out = []
    for n in range(1, 8):
        out.extend(canonical_graphs(n))
    return out


@pytest.fixture(scope="session")
def all_graphs_n8():
    return canonical_graphs(8)


def all_labeled_graphs(n):
    """Every labeled graph on n vertices (use only for tiny n)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield from_edge_list(n, edges)
