"""Acceptance criteria 1-12, each at its stated size and tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line. Run directly with
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import sys
import time

import pytest

from locdom import harness
from locdom.families import h_graph

CRITERIA = {
    1: ("minimum-orientation oracles agree on connected graphs n <= 6", lambda: harness.suite_oracles(max_n=6)),
    2: ("best orientation equals LD number on 4-cycle-free graphs n <= 7", lambda: harness.suite_c4free(max_n=7)),
    3: ("complete graphs: best for n <= 8, worst for n <= 6",
        lambda: harness.suite_cliques(max_lower=8, max_upper=6)),
    4: ("stars and extremal characterisations n <= 6",
        lambda: harness.suite_extremal(max_n=6, max_star=8)),
    5: ("paths n <= 15 and cycles n <= 10", lambda: harness.suite_paths_cycles(max_path=15, max_cycle=10)),
    6: ("worst orientation of trees n <= 10 equals independence number", lambda: harness.suite_trees(max_n=10)),
    7: ("twin-free half construction: n <= 8 exhaustive plus 1000 random n <= 60",
        lambda: harness.suite_twin_free(max_n=8, random_count=1000, random_max_n=60, seed=0)),
    8: ("tree construction bound and closure characterisation n <= 12",
        lambda: harness.suite_tree_bound(max_n=12)),
    9: ("bounds sandwich: connected n <= 6 plus 500 random n <= 7",
        lambda: harness.suite_sandwich(max_n=6, random_count=500, random_max_n=7, seed=0)),
    10: ("random regular construction d in {8,16,24}, n in {100,200,400}, 5 seeds",
         lambda: harness.suite_regular(degrees=(8, 16, 24), orders=(100, 200, 400), seeds=range(5))),
    11: ("pendant-triangle reduction on connected graphs n <= 5", lambda: harness.suite_reduction(max_n=5)),
    12: ("H_{k,t} sweep with exact worst orientation of H_{2,2}",
         lambda: harness.suite_h_graphs(ks=(2, 3), ts=(2, 3))),
}


def run_criterion(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    results = fn()
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results)
    checked = sum(r.instances for r in results)
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title} ({checked} instances, {elapsed:.1f}s)"
    for r in results:
        if not r.passed:
            line += f"\n    failed claim: {r.claim}: {r.failure}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_h22_bracket_values():
    """The exact worst orientation of H_{2,2} and its reported brackets."""
    row = harness.h_graph_row(2, 2)
    assert h_graph(2, 2).m == 10
    assert row["gamma_bracket"] == [2, 4]
    assert row["lower_bound"] == 2
    assert row["gamma_ld"] == 4 and row["upper_dld"] == 4
    assert row["lower_bound"] <= row["upper_dld"] <= row["upper_bound"]


if __name__ == "__main__":
    all_ok = True
    for n in sorted(CRITERIA):
        ok, line = run_criterion(n)
        all_ok &= ok
        print(line, flush=True)
    sys.exit(0 if all_ok else 1)
