import itertools
import math
from fractions import Fraction

import pytest

from locdom.constructions import (RandomizedConfig, check_no_directed_c4_path, clique_code_size,
                                  clique_subset_construction, forest_min_ld, greedy_distinct_subsets, is_in_TSL,
                                  matching_construction, orient_from_undirected_ld, orient_spanning_ld,
                                  regular_matching_construction, regular_random_construction,
                                  source_forcing_orientation, transitive_tournament_witness, tree_bound,
                                  tree_gamma_ld, tree_ld_construction, twin_free_half_construction,
                                  worm_orientation, worst_upper_witness)
from locdom.corpus import connected_graphs_upto, trees_upto, twin_free_connected
from locdom.errors import PreconditionError
from locdom.extremes import lower_dld_exact, upper_dld_exact
from locdom.families import complete, cycle, path, petersen, random_regular, star
from locdom.graph import Graph, Orientation
from locdom.params import color_with, independence_number, matching_number, two_distance_independence
from locdom.solver import gamma_ld, gamma_ld_digraph, min_ld


# orienting undirected sets ----------------------------------------------------


def test_orient_undirected_keeps_codes():
    g = path(5)
    d, cert = orient_from_undirected_ld(g, {1, 3})
    assert cert.verify(g)
    assert cert.code_mask(2) == 0b1010
    _, cert = orient_from_undirected_ld(complete(3), [0, 1])
    assert cert.verify(complete(3))
    _, cert = orient_from_undirected_ld(star(6), range(1, 6))
    assert cert.size == 5
    with pytest.raises(PreconditionError):
        orient_from_undirected_ld(path(5), {0})


def test_orient_spanning_subgraph():
    g = cycle(6)
    h = path(6)
    s = min_ld(h.adj)
    d, cert = orient_spanning_ld(g, h, s)
    assert cert.verify(g) and cert.size == gamma_ld(h)[0]
    with pytest.raises(PreconditionError):
        orient_spanning_ld(path(6), cycle(6), s)


def test_matching_construction():
    assert matching_construction(path(4))[1].size == 2
    assert matching_construction(Graph(6, [(0, 1), (2, 3), (4, 5)]))[1].size == 3
    assert matching_construction(star(6))[1].size == 5
    for g in connected_graphs_upto(6):
        _, cert = matching_construction(g)
        assert cert.verify(g) and cert.size == g.n - matching_number(g)[0]


def test_clique_subset_construction():
    assert [clique_code_size(n) for n in (2, 4, 7, 8, 11)] == [1, 2, 3, 3, 4]
    for n in range(2, 9):
        d, cert = clique_subset_construction(n)
        assert cert.verify(d.host)
        assert cert.size == lower_dld_exact(complete(n))[0]


def test_transitive_tournament():
    assert transitive_tournament_witness(4).value == 2
    assert transitive_tournament_witness(5).value == 3
    assert transitive_tournament_witness(2).value == 1
    w = transitive_tournament_witness(50, cap=10)
    assert not w.verified and w.value == 25


def test_source_forcing():
    d = source_forcing_orientation(path(4), {0, 2})
    assert d.sources() & 0b101 == 0b101
    assert gamma_ld_digraph(d)[0] >= 2
    d = source_forcing_orientation(star(5), range(1, 5))
    assert gamma_ld_digraph(d)[0] == 4
    with pytest.raises(PreconditionError):
        source_forcing_orientation(path(3), {0, 1})
    for g in connected_graphs_upto(6):
        _, x = independence_number(g)
        _, cert = gamma_ld_digraph(source_forcing_orientation(g, x))
        assert set(x) <= set(cert.set)


def test_worst_upper_witness():
    for bits in range(0, 64, 7):
        assert worst_upper_witness(path(7), Orientation(path(7), bits)).size <= 4
    assert worst_upper_witness(star(6), Orientation(star(6), 5)).size == 5
    assert worst_upper_witness(complete(5), Orientation(complete(5), 99)).size == 4
    for g in connected_graphs_upto(6, min_n=2):
        d = upper_dld_exact(g)[1]
        cert = worst_upper_witness(g, d)
        assert cert.size <= g.n - two_distance_independence(g)[0]


# trees --------------------------------------------------------------------------


def test_forest_solver_matches_exact_search():
    for t in trees_upto(10):
        assert tree_gamma_ld(t) == gamma_ld(t)[0]
    forest = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6)])
    assert forest_min_ld(forest).bit_count() == gamma_ld(forest)[0]
    assert forest_min_ld(path(3), forced_out=0b010, forced_in=0b101).bit_count() == 2
    assert forest_min_ld(Graph(1), forced_out=1) is None


def test_tree_construction_examples():
    cert = tree_ld_construction(path(5))
    assert cert.size == 2 and tree_bound(path(5)) == 2
    cert = tree_ld_construction(star(5))
    assert cert.size == gamma_ld(star(5))[0] == 4 <= tree_bound(star(5))
    assert tree_ld_construction(path(2)).size == 1
    with pytest.raises(PreconditionError):
        tree_ld_construction(cycle(5))


def test_support_link_closure_examples():
    assert is_in_TSL(path(2))
    assert is_in_TSL(path(5))
    # P_7 has no support link, so its bound is 7/2 and is not reached
    assert tree_bound(path(7)) == Fraction(7, 2) and gamma_ld(path(7))[0] == 3
    assert not is_in_TSL(path(7))
    # stars reach (n + l - s)/2
    assert is_in_TSL(star(5))


# twin-free graphs -------------------------------------------------------------


def test_twin_free_examples():
    assert twin_free_half_construction(cycle(6))[1].size <= 3
    assert twin_free_half_construction(path(6))[1].size <= 3
    two = Graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
    d, cert = twin_free_half_construction(two)
    assert cert.verify(two) and cert.size <= 4


def test_twin_free_rejects_bad_input():
    with pytest.raises(PreconditionError):
        twin_free_half_construction(cycle(4))
    with pytest.raises(PreconditionError):
        twin_free_half_construction(Graph(5, [(0, 1), (1, 2), (2, 3)]))


def test_twin_free_sandwich_small():
    for n in range(4, 8):
        for g in twin_free_connected(n):
            _, cert = twin_free_half_construction(g)
            assert lower_dld_exact(g)[0] <= cert.size <= n // 2


# regular graphs ------------------------------------------------------------------


def test_greedy_examples():
    d, cert = greedy_distinct_subsets(cycle(6), {0, 2, 4})
    assert cert.verify(cycle(6))
    _, cert = greedy_distinct_subsets(complete(5), {0, 1, 2})
    assert cert.size == 3
    with pytest.raises(PreconditionError):
        greedy_distinct_subsets(star(5), {0})


def test_greedy_never_fails_when_precondition_holds():
    count = 0
    for g in connected_graphs_upto(6):
        need = math.log2(g.max_degree) + 1 if g.max_degree else 1
        for x in range(1 << g.n):
            if all((g.adj[v] & x).bit_count() >= need for v in range(g.n) if not x >> v & 1):
                greedy_distinct_subsets(g, x)
                count += 1
    assert count > 500


def test_random_construction():
    g = random_regular(16, 200, 1)
    d, cert, report = regular_random_construction(g, RandomizedConfig(seed=1))
    assert cert.verify(g)
    assert cert.size <= 50 * 2 * math.log2(16) / 16 * 200
    again = regular_random_construction(g, RandomizedConfig(seed=1))
    assert again[1] == cert


def test_random_construction_on_k20_with_lower_probability():
    g = complete(20)
    _, cert, _ = regular_random_construction(g, RandomizedConfig(seed=1, p=0.5))
    assert cert.verify(g) and cert.size < 19


def test_random_construction_preconditions():
    with pytest.raises(PreconditionError):
        regular_random_construction(random_regular(4, 20, 0))
    with pytest.raises(ValueError):
        RandomizedConfig(c=1)
    with pytest.raises(ValueError):
        RandomizedConfig(max_retries=0)


def test_regular_matching():
    h, cert, d = regular_matching_construction(complete(4))
    assert cert.size <= 2
    h, cert, d = regular_matching_construction(petersen())
    assert cert.size <= 5 and cert.verify(h)
    _, dcert = gamma_ld_digraph(d)
    assert dcert.size <= 5
    with pytest.raises(PreconditionError):
        regular_matching_construction(cycle(5))
    for seed in range(40):
        for deg, n in ((3, 12), (4, 11), (5, 14)):
            g = random_regular(deg, n, seed)
            h, cert, d = regular_matching_construction(g)
            assert cert.size == matching_number(g)[0]


# colour orientations ---------------------------------------------------------------


def test_directed_path_check():
    c4 = cycle(4)
    assert not check_no_directed_c4_path(c4, Orientation.from_arcs(c4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert check_no_directed_c4_path(c4, Orientation.from_arcs(c4, [(0, 1), (2, 1), (2, 3), (0, 3)]))
    assert check_no_directed_c4_path(path(6), Orientation(path(6), 0b10101))


def test_worm_orientation():
    assert gamma_ld_digraph(worm_orientation(cycle(6), [0, 1] * 3))[0] >= gamma_ld(cycle(6))[0]
    d = worm_orientation(cycle(5), [0, 1, 0, 1, 2])
    assert gamma_ld_digraph(d)[0] >= 2
    for col in itertools.product(range(4), repeat=4):
        with pytest.raises(PreconditionError):
            worm_orientation(complete(4), col)


def test_worm_orientation_dominates_undirected_on_three_colourable():
    for g in connected_graphs_upto(7):
        col = color_with(g, 3)
        if col is None:
            continue
        d = worm_orientation(g, col)
        assert gamma_ld_digraph(d)[0] >= gamma_ld(g)[0]
