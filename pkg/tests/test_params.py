from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from locdom.errors import CapExceededError
from locdom.families import complete, cycle, h_graph, path, petersen
from locdom.graph import Graph
from locdom.params import (average_degree, chromatic_number, clique_number, graph_params, independence_number,
                           is_clique, is_independent, is_matching, is_proper_coloring, is_two_distance_independent,
                           mad, matching_number, two_distance_independence, vertex_cover_number)

from conftest import graphs


def brute_mad(g):
    best = Fraction(0)
    for k in range(1, g.n + 1):
        for sub in combinations(range(g.n), k):
            s = sum(1 << v for v in sub)
            e = sum((g.adj[v] & s).bit_count() for v in sub) // 2
            best = max(best, Fraction(2 * e, k))
    return best


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_independence_and_clique_against_networkx(g):
    a, s = independence_number(g)
    assert is_independent(g, s) and len(s) == a
    h = g.to_networkx()
    assert a == max(len(c) for c in nx.find_cliques(nx.complement(h)))
    w, c = clique_number(g)
    assert is_clique(g, c) and w == max(len(c) for c in nx.find_cliques(h))
    assert vertex_cover_number(g) == g.n - a


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_matching_and_two_distance(g):
    k, m = matching_number(g)
    assert is_matching(g, m) and len(m) == k
    a2, s = two_distance_independence(g)
    assert is_two_distance_independent(g, s) and len(s) == a2


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_mad_matches_brute_force(g):
    assert mad(g) == brute_mad(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_colouring_is_proper(g):
    res = chromatic_number(g, limit=4)
    if res.value is not None:
        assert is_proper_coloring(g, res.coloring)
        if res.value > 1:
            assert chromatic_number(g, limit=res.value - 1).value is None


def test_known_values():
    assert mad(complete(4)) == 3
    assert mad(cycle(6)) == 2
    assert mad(path(5)) == Fraction(8, 5)
    assert two_distance_independence(path(7)) == (3, [0, 3, 6])
    assert clique_number(h_graph(3, 3))[0] == 3
    assert matching_number(petersen())[0] == 5
    assert chromatic_number(cycle(5)).value == 3
    assert chromatic_number(complete(4)).value is None
    assert average_degree(cycle(5)) == 2


def test_graph_params_bundle():
    p = graph_params(petersen())
    assert (p.alpha, p.matching, p.alpha2, p.omega, p.beta, p.chi) == (4, 5, 1, 2, 6, 3)
    assert p.to_json()["mad"] == [3, 1]


def test_cap_refusal():
    with pytest.raises(CapExceededError):
        independence_number(Graph(50), cap=40)
