from locdom.corpus import connected_graphs, random_graphs, random_twin_free_graphs, trees, twin_free_connected
from locdom.graph import is_connected, is_twin_free
from locdom.harness import domination_number, min_over_orientations, suite_h_graphs, suite_reduction
from locdom.families import cycle, path, star


def test_corpus_counts():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [len(twin_free_connected(n)) for n in range(1, 8)] == [1, 0, 0, 1, 5, 31, 293]
    assert [len(trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_random_samples_are_seeded():
    a = random_graphs(20, 7, seed=3, max_m=12)
    assert a == random_graphs(20, 7, seed=3, max_m=12)
    assert all(g.m <= 12 for g in a)
    tf = random_twin_free_graphs(20, 30, seed=1)
    assert all(is_connected(g) and is_twin_free(g) for g in tf)


def test_oracles():
    assert domination_number(path(7)) == 3
    assert domination_number(star(6)) == 1
    assert min_over_orientations(cycle(5)) == 2


def test_small_suites():
    assert all(r.passed for r in suite_reduction(max_n=4))
    res = suite_h_graphs(ks=(2,), ts=(2,))[0]
    assert res.passed and res.notes["rows"][0]["upper_dld"] == 4
