import pytest
from hypothesis import given, settings

from locdom.errors import CapExceededError, PreconditionError
from locdom.extremes import (_scan_python, check_lower_extremal, check_upper_extremal, codes_feasible,
                             directed_ld_values, edge_removal_monotone_check, lower_dld_exact,
                             lower_dld_via_spanning, upper_dld_exact)
from locdom.families import complete, complete_bipartite, cycle, h_graph, path, star
from locdom.graph import Graph, Orientation
from locdom.solver import gamma_ld_digraph, min_ld

from conftest import graphs


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6, max_m=10))
def test_extremes_match_enumeration(g):
    values = directed_ld_values(g)
    lo, lo_cert = lower_dld_exact(g)
    hi, worst, hi_cert = upper_dld_exact(g)
    assert lo == min(values) == lower_dld_via_spanning(g)
    assert hi == max(values)
    # ties go to the smallest direction string
    assert worst.direction == values.index(hi)
    assert lo_cert.verify(g) and hi_cert.verify(g)


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=6, max_m=9))
def test_numpy_values_match_solver(g):
    values = directed_ld_values(g)
    for d in range(0, 1 << g.m, max(1, (1 << g.m) // 16)):
        assert values[d] == gamma_ld_digraph(Orientation(g, d))[0]


def test_python_scan_agrees_with_numpy():
    g = cycle(7)
    assert _scan_python(g, 1, 1 << g.m, 0)[0] == upper_dld_exact(g)[0]


def test_codes_feasible():
    assert codes_feasible(complete(7), 0b111)
    assert codes_feasible(complete(10), 0b111)
    assert not codes_feasible(complete(11), 0b111)
    assert not codes_feasible(star(4), 0b0001)


def test_known_extremes():
    assert [lower_dld_exact(complete(n))[0] for n in range(2, 9)] == [1, 2, 2, 2, 3, 3, 3]
    assert [upper_dld_exact(complete(n))[0] for n in range(2, 7)] == [1, 2, 2, 3, 3]
    assert upper_dld_exact(cycle(4))[0] == 3
    assert upper_dld_exact(path(4))[0] == 2
    assert lower_dld_exact(Graph(2, [(0, 1)]).remove_edge(0, 1))[0] == 2


def test_parallel_scan_is_deterministic():
    g = h_graph(2, 3)
    a = upper_dld_exact(g, workers=1)
    b = upper_dld_exact(g, workers=3)
    assert a[0] == b[0] == 7
    assert a[1] == b[1]


def test_extremal_predicates():
    assert check_lower_extremal(star(6)) and check_upper_extremal(star(6))
    assert check_upper_extremal(complete_bipartite(2, 3))
    assert not check_lower_extremal(complete_bipartite(2, 3))
    assert not check_upper_extremal(cycle(5))
    with pytest.raises(PreconditionError):
        check_lower_extremal(Graph(3, [(0, 1)]))


def test_edge_removal_monotone():
    assert edge_removal_monotone_check(path(6)) == (True, None)
    assert edge_removal_monotone_check(cycle(7)) == (True, None)
    with pytest.raises(PreconditionError):
        edge_removal_monotone_check(cycle(4))


def test_caps():
    with pytest.raises(CapExceededError):
        upper_dld_exact(complete(8))
    with pytest.raises(CapExceededError):
        lower_dld_via_spanning(complete(7))
    assert min_ld(complete(3).adj).bit_count() == 2
