import pytest
from hypothesis import given, settings

from locdom.errors import GraphValidationError, ParseError
from locdom.families import complete, cycle, h_graph, make_family, parse_family_spec, path, petersen, star
from locdom.graph import (Graph, Orientation, components, enumerate_orientations, find_twins, four_cycles,
                          gray_codes, has_c4_subgraph, is_complete_bipartite, is_connected, is_star, is_tree,
                          is_twin_free, pendant_triangle_transform, tree_support_profile)
from locdom.io import from_edge_list, from_graph6, to_edge_list, to_graph6

from conftest import graphs


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.closed(1) == 0b111


def test_rejects_loops_and_duplicates():
    with pytest.raises(GraphValidationError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphValidationError):
        Graph(3, [(0, 1), (1, 0)])


def test_components_and_connectivity():
    g = Graph(5, [(0, 1), (3, 4)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(path(5))


def test_twins():
    assert find_twins(cycle(4)) == [(0, 2), (1, 3)]
    assert not is_twin_free(complete(3))
    assert is_twin_free(path(4))
    assert is_twin_free(petersen())


def test_four_cycles():
    assert list(four_cycles(cycle(4))) == [(0, 1, 2, 3)]
    assert len(list(four_cycles(complete(4)))) == 3
    assert not has_c4_subgraph(cycle(5))


def test_shape_predicates():
    assert is_star(star(5)) and not is_star(path(4))
    assert is_complete_bipartite(cycle(4))
    assert not is_complete_bipartite(cycle(6))
    assert is_tree(star(6)) and not is_tree(cycle(3))


def test_support_profile_of_path():
    prof = tree_support_profile(path(5))
    assert (prof.l, prof.s, prof.sl) == (2, 2, 1)
    prof = tree_support_profile(path(2))
    assert (prof.leaves, prof.supports) == (0b10, 0b01)


def test_pendant_triangles_layout():
    g = pendant_triangle_transform(path(2))
    assert g.n == 6
    assert g.has_edge(0, 2) and g.has_edge(0, 3) and g.has_edge(2, 3)
    assert g.has_edge(1, 4) and g.has_edge(4, 5)


def test_orientation_roundtrip_and_masks():
    g = cycle(4)
    d = Orientation.from_arcs(g, [(0, 1), (2, 1), (2, 3), (0, 3)])
    assert Orientation.from_hex(g, d.hex()) == d
    assert d.in_masks[1] == 0b101
    assert d.sources() == 0b101
    assert d.flipped(0).has_arc(1, 0)


def test_gray_codes_visit_everything_once():
    seen = [c for c, _ in gray_codes(4)]
    assert sorted(seen) == list(range(16))
    flips = [b for _, b in gray_codes(4)]
    assert flips[0] == -1
    assert all(bin(a ^ b).count("1") == 1 for a, b in zip(seen, seen[1:]))


def test_enumerate_orientations_count():
    assert len({d.direction for d in enumerate_orientations(cycle(5))}) == 32


def test_families():
    assert h_graph(2, 2).m == 10
    assert h_graph(2, 3).m == 18
    assert petersen().m == 15
    assert parse_family_spec("h_graph=3,3").n == 18
    assert make_family("cycle", 7).m == 7
    with pytest.raises(ValueError):
        make_family("nope", 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=20))
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_edge_list_roundtrip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_graph6_known_value():
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("C~") == complete(4)


def test_parse_errors():
    with pytest.raises(ParseError):
        from_graph6("!!")
    with pytest.raises(ParseError):
        from_edge_list("0 1 2")
