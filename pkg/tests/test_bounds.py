from fractions import Fraction

import pytest
from hypothesis import given, settings

from locdom.bounds import BoundEntry, ClassFlags, bounds_report
from locdom.errors import ParseError
from locdom.extremes import lower_dld_exact, upper_dld_exact
from locdom.families import cycle, h_graph, path, petersen
from locdom.graph import Graph
from locdom.solver import gamma_ld

from conftest import graphs


def entry(report, name, target):
    return next(e for e in report.entries if e.name == name and e.target == target)


def test_flag_parsing():
    f = ClassFlags.parse("planar,perfect,chi_bounded=2,hampath=0-1-2,factor=0-1/2-3")
    assert f.planar and f.perfect and f.chi_bounded == 2
    assert f.hamiltonian_path == [0, 1, 2]
    assert f.path_factor == [[0, 1], [2, 3]]
    with pytest.raises(ParseError):
        ClassFlags.parse("bogus")


def test_entry_admits():
    up = BoundEntry("x", "gamma_ld", "upper", Fraction(7, 2), "", True)
    assert up.admits(3) and not up.admits(4)
    lo = BoundEntry("y", "gamma_ld", "lower", 1.9999999999, "", True)
    assert lo.admits(2)
    off = BoundEntry("z", "gamma_ld", "lower", 10, "", False, "n/a")
    assert off.admits(0)


def test_known_entries():
    r = bounds_report(path(6), ClassFlags.parse("planar,outerplanar"))
    assert entry(r, "tree_support_links", "gamma_ld").value == 3
    assert entry(r, "bipartite_c4free", "upper_dld").value == 3
    r = bounds_report(petersen())
    assert entry(r, "regular_matching", "lower_dld").value == 5
    assert entry(r, "twin_free_half", "lower_dld").value == 5
    r = bounds_report(h_graph(2, 2))
    assert entry(r, "h_graph_pairs", "gamma_ld").value == 2
    assert entry(r, "h_graph_transitive", "upper_dld").value == 2


def test_inapplicable_entries_carry_reasons():
    r = bounds_report(cycle(4))
    twin = entry(r, "twin_free_half", "lower_dld")
    assert not twin.applicable and twin.reason
    small_planar = entry(bounds_report(cycle(5), ClassFlags(planar=True)), "planar", "lower_dld")
    assert not small_planar.applicable


def test_cap_refusal_is_recorded():
    r = bounds_report(Graph(45, [(i, i + 1) for i in range(44)]), exact_cap=20, param_cap=20)
    refused = [e for e in r.entries if not e.applicable and "cap" in e.reason]
    assert refused


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7, max_m=14))
def test_sandwich(g):
    exact = {"gamma_ld": gamma_ld(g)[0], "lower_dld": lower_dld_exact(g)[0], "upper_dld": upper_dld_exact(g)[0]}
    report = bounds_report(g)
    assert report.violations(exact) == []
    lo, hi = report.best("gamma_ld")
    assert lo is None or lo <= exact["gamma_ld"]
    assert hi is None or exact["gamma_ld"] <= hi


def test_report_json():
    data = bounds_report(cycle(5)).to_json()
    assert data["graph"] and isinstance(data["entries"], list)
    assert all({"name", "target", "direction", "citation"} <= set(e) for e in data["entries"])
