import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdom.errors import CapExceededError, PreconditionError
from locdom.families import complete, complete_bipartite, cycle, path, star
from locdom.graph import Graph, Orientation
from locdom.solver import (LdCertificate, digraph_attains_n_minus_1, first_violation, gamma_ld, gamma_ld_digraph,
                           is_k_dominating, is_ld, is_ld_set_digraph, is_ld_set_undirected, k_domination_number,
                           min_ld)

from conftest import brute_min_ld, graphs


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8))
def test_gamma_ld_matches_brute_force(g):
    value, cert = gamma_ld(g)
    assert value == brute_min_ld(g.adj, g.n)
    assert cert.verify(g)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=7), st.integers(0, 2**21 - 1))
def test_digraph_matches_brute_force(g, bits):
    d = Orientation(g, bits % (1 << g.m))
    value, cert = gamma_ld_digraph(d)
    assert value == brute_min_ld(d.in_masks, g.n)
    assert cert.orientation == d and cert.verify(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(0, 127), st.integers(0, 127))
def test_forced_masks(g, fin, fout):
    full = g.all_mask
    fin &= full
    fout &= full & ~fin
    s = min_ld(g.adj, fin, fout)
    candidates = [sum(1 << v for v in c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k)]
    ok = [c for c in candidates if c & fin == fin and not c & fout and is_ld(g.adj, c)]
    if not ok:
        assert s is None
    else:
        assert s is not None and s.bit_count() == min(c.bit_count() for c in ok)
        assert s & fin == fin and not s & fout


def test_lexicographically_first_witness():
    _, cert = gamma_ld(path(5))
    assert cert.set == (1, 3)


def test_known_values():
    assert [gamma_ld(path(n))[0] for n in range(1, 16)] == [-(-2 * n // 5) for n in range(1, 16)]
    assert gamma_ld(complete(5))[0] == 4
    assert gamma_ld(complete(1))[0] == 1
    assert gamma_ld(cycle(4))[0] == 2
    assert gamma_ld(star(6))[0] == 5


def test_violations():
    assert first_violation(path(3).adj, 0b001).kind == "undominated"
    v = first_violation(star(3).adj, 0b001)
    assert v.kind == "clash" and v.vertices == (1, 2)
    assert not is_ld_set_undirected(star(3), [0])
    assert is_ld_set_undirected(star(3), [0, 1])
    d = Orientation.from_arcs(path(3), [(0, 1), (2, 1)])
    assert not is_ld_set_digraph(d, [1])


def test_certificate_json_roundtrip():
    d = Orientation(cycle(5), 0b10110)
    _, cert = gamma_ld_digraph(d)
    back = LdCertificate.from_json(cert.to_json(), cycle(5))
    assert back == cert and back.verify(cycle(5))


def test_certificate_tampering_detected():
    _, cert = gamma_ld(path(5))
    data = cert.to_json()
    data["codes"]["0"] = 2
    assert not LdCertificate.from_json(data, path(5)).verify(path(5))


def test_k_domination():
    value, s = k_domination_number(cycle(6), 2)
    assert value == 3 and is_k_dominating(cycle(6), s, 2)
    assert k_domination_number(star(5), 1)[0] == 1


def test_attains_n_minus_1():
    assert digraph_attains_n_minus_1(Orientation(star(5), 0))
    k23 = complete_bipartite(2, 3)
    # every arc from the 2-side to the 3-side
    d = Orientation.from_rule(k23, lambda a, b: a if a < 2 else b)
    assert digraph_attains_n_minus_1(d)
    assert gamma_ld_digraph(d)[0] == 4
    assert not digraph_attains_n_minus_1(Orientation(path(4), 0))
    with pytest.raises(PreconditionError):
        digraph_attains_n_minus_1(Orientation(Graph(3, [(0, 1)]), 0))


def test_cap():
    with pytest.raises(CapExceededError):
        gamma_ld(path(12), cap=10)
