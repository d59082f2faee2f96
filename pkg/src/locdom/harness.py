"""Claim-checking suites over exhaustive corpora and graph families.

Each suite returns a list of ``ClaimResult``; a failing instance is kept in
graph6 form so it can be replayed with ``locdom compute``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .bounds import bounds_report
from .constructions import (RandomizedConfig, clique_code_size, clique_subset_construction, is_in_TSL,
                            regular_random_construction, transitive_tournament_witness, tree_bound,
                            tree_ld_construction, twin_free_half_construction)
from .corpus import (connected_graphs_upto, random_graphs, random_twin_free_graphs, trees_upto,
                     twin_free_connected)
from .errors import ConstructionError
from .extremes import (check_lower_extremal, check_upper_extremal, lower_dld_exact, lower_dld_via_spanning,
                       upper_dld_exact)
from .families import complete, cycle, h_graph, path, random_regular, star
from .graph import Graph, enumerate_orientations, has_c4_subgraph, pendant_triangle_transform
from .io import to_graph6
from .params import independence_number
from .solver import gamma_ld, gamma_ld_digraph


@dataclass
class ClaimResult:
    claim: str
    instances: int = 0
    passed: bool = True
    seconds: float = 0.0
    failure: dict | None = None
    notes: dict = field(default_factory=dict)

    def fail(self, g: Graph | None, **detail) -> None:
        if self.passed:
            self.passed = False
            self.failure = {"graph6": to_graph6(g) if g is not None else None, **detail}

    def to_json(self, timing: bool = True) -> dict:
        out = {"claim": self.claim, "instances": self.instances, "passed": self.passed,
               "failure": self.failure, "notes": self.notes}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


class _Timer:
    def __init__(self, res: ClaimResult):
        self.res = res

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.res

    def __exit__(self, *exc):
        self.res.seconds += time.perf_counter() - self.t0
        return False


def _claim(name: str) -> tuple[ClaimResult, _Timer]:
    res = ClaimResult(name)
    return res, _Timer(res)


def min_over_orientations(g: Graph) -> int:
    """Oracle: smallest directed LD number over every orientation, one exact solve each."""
    return min(gamma_ld_digraph(d, cap=g.n)[0] for d in enumerate_orientations(g))


def domination_number(g: Graph) -> int:
    """Oracle: smallest dominating set by trying subsets in increasing size."""
    closed = [g.closed(v) for v in range(g.n)]
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == g.all_mask:
                return k
    return g.n


# suites --------------------------------------------------------------------


def suite_oracles(max_n: int = 6) -> list[ClaimResult]:
    res, timer = _claim("three minimum-orientation oracles agree")
    with timer:
        for g in connected_graphs_upto(max_n, min_n=2):
            a = lower_dld_exact(g)[0]
            b = lower_dld_via_spanning(g)
            c = min_over_orientations(g)
            res.instances += 1
            if not a == b == c:
                res.fail(g, code_matching=a, spanning=b, enumeration=c)
    return [res]


def suite_c4free(max_n: int = 7) -> list[ClaimResult]:
    res, timer = _claim("best orientation equals undirected LD number without 4-cycles")
    with timer:
        for g in connected_graphs_upto(max_n):
            if has_c4_subgraph(g):
                continue
            a, b = lower_dld_exact(g)[0], gamma_ld(g)[0]
            res.instances += 1
            if a != b:
                res.fail(g, lower_dld=a, gamma_ld=b)
    return [res]


def suite_cliques(max_lower: int = 8, max_upper: int = 6) -> list[ClaimResult]:
    low, t1 = _claim("best orientation of K_n uses min k with n <= k + 2^k - 1")
    with t1:
        values = []
        for n in range(2, max_lower + 1):
            g = complete(n)
            exact = lower_dld_exact(g)[0]
            built = clique_subset_construction(n)[1].size
            values.append(exact)
            low.instances += 1
            if not exact == built == clique_code_size(n):
                low.fail(g, lower_dld=exact, construction=built, formula=clique_code_size(n))
        low.notes["values"] = values
    up, t2 = _claim("worst orientation of K_n has value ceil(n/2)")
    with t2:
        values = []
        for n in range(2, max_upper + 1):
            g = complete(n)
            exact = upper_dld_exact(g)[0]
            witness = transitive_tournament_witness(n).value
            values.append(exact)
            up.instances += 1
            if not exact == witness == -(-n // 2):
                up.fail(g, upper_dld=exact, transitive=witness)
        up.notes["values"] = values
    return [low, up]


def suite_extremal(max_n: int = 6, max_star: int = 8) -> list[ClaimResult]:
    stars, t1 = _claim("stars reach n - 1 in both extremes")
    with t1:
        for n in range(2, max_star + 1):
            g = star(n)
            lo, hi = lower_dld_exact(g)[0], upper_dld_exact(g)[0]
            stars.instances += 1
            if lo != n - 1 or hi != n - 1:
                stars.fail(g, lower_dld=lo, upper_dld=hi)
    chars, t2 = _claim("extremal characterisations match exact values")
    with t2:
        for g in connected_graphs_upto(max_n, min_n=2):
            lo, hi = lower_dld_exact(g)[0], upper_dld_exact(g)[0]
            chars.instances += 1
            if check_lower_extremal(g) != (lo == g.n - 1) or check_upper_extremal(g) != (hi == g.n - 1):
                chars.fail(g, lower_dld=lo, upper_dld=hi,
                           lower_predicate=check_lower_extremal(g), upper_predicate=check_upper_extremal(g))
    return [stars, chars]


def suite_paths_cycles(max_path: int = 15, max_cycle: int = 10) -> list[ClaimResult]:
    paths, t1 = _claim("LD number of P_n is ceil(2n/5)")
    with t1:
        for n in range(1, max_path + 1):
            v = gamma_ld(path(n))[0]
            paths.instances += 1
            if v != -(-2 * n // 5):
                paths.fail(path(n), gamma_ld=v)
    cycles, t2 = _claim("worst orientation of C_n is ceil(n/2), C_4 is 3, P_4 is 2")
    with t2:
        for n in range(3, max_cycle + 1):
            v = upper_dld_exact(cycle(n))[0]
            want = 3 if n == 4 else -(-n // 2)
            cycles.instances += 1
            if v != want:
                cycles.fail(cycle(n), upper_dld=v, expected=want)
        v = upper_dld_exact(path(4))[0]
        cycles.instances += 1
        if v != 2:
            cycles.fail(path(4), upper_dld=v, expected=2)
    return [paths, cycles]


def suite_trees(max_n: int = 10) -> list[ClaimResult]:
    res, timer = _claim("worst orientation of a tree equals its independence number")
    with timer:
        for t in trees_upto(max_n, min_n=1):
            hi, a = upper_dld_exact(t)[0], independence_number(t)[0]
            res.instances += 1
            if hi != a:
                res.fail(t, upper_dld=hi, alpha=a)
    return [res]


def suite_twin_free(max_n: int = 8, random_count: int = 1000, random_max_n: int = 60,
                    seed: int = 0) -> list[ClaimResult]:
    res, timer = _claim("twin-free graphs have an orientation with an LD set of size <= n/2")
    with timer:
        corpus = [g for n in range(1, max_n + 1) for g in twin_free_connected(n) if g.m]
        corpus += random_twin_free_graphs(random_count, random_max_n, seed, min_n=4)
        for g in corpus:
            res.instances += 1
            try:
                _, cert = twin_free_half_construction(g)
            except (ConstructionError, AssertionError) as exc:
                res.fail(g, error=str(exc))
                continue
            if cert.size > g.n // 2 or not cert.verify(g):
                res.fail(g, size=cert.size)
    return [res]


def suite_tree_bound(max_n: int = 12) -> list[ClaimResult]:
    bound, t1 = _claim("tree construction stays within (n + l - s - sl)/2")
    tight, t2 = _claim("tree bound is tight exactly on the support-link closure")
    for t in trees_upto(max_n):
        with t1:
            cert = tree_ld_construction(t)
            exact = gamma_ld(t)[0]
            limit = tree_bound(t)
            bound.instances += 1
            if not exact <= cert.size <= limit or not cert.verify(t):
                bound.fail(t, size=cert.size, gamma_ld=exact, bound=str(limit))
        with t2:
            member = is_in_TSL(t)
            tight.instances += 1
            if member != (exact == limit):
                tight.fail(t, member=member, gamma_ld=exact, bound=str(limit))
    return [bound, tight]


def exact_values(g: Graph) -> dict[str, int]:
    return {"gamma_ld": gamma_ld(g)[0], "lower_dld": lower_dld_exact(g)[0], "upper_dld": upper_dld_exact(g)[0]}


def suite_sandwich(max_n: int = 6, random_count: int = 500, random_max_n: int = 7, seed: int = 0,
                   max_m: int = 20) -> list[ClaimResult]:
    res, timer = _claim("every applicable bound brackets the exact values")
    with timer:
        corpus = list(connected_graphs_upto(max_n))
        corpus += random_graphs(random_count, random_max_n, seed, max_m=max_m)
        checked = 0
        for g in corpus:
            exact = exact_values(g)
            report = bounds_report(g)
            res.instances += 1
            checked += sum(len(report.applicable(t)) for t in exact)
            bad = report.violations(exact)
            if bad:
                res.fail(g, exact=exact, violated=[e.to_json() for e in bad])
        res.notes["bound_checks"] = checked
    return [res]


def suite_regular(degrees=(8, 16, 24), orders=(100, 200, 400), seeds=range(5), c: float = 2.0) -> list[ClaimResult]:
    res, timer = _claim("random regular construction verifies within 100 log2(d)/d n")
    with timer:
        failures = 0
        worst = 0.0
        for d in degrees:
            for n in orders:
                for s in seeds:
                    g = random_regular(d, n, s)
                    res.instances += 1
                    try:
                        _, cert, _ = regular_random_construction(g, RandomizedConfig(c=c, seed=s))
                    except ConstructionError:
                        failures += 1
                        continue
                    limit = 100 * math.log2(d) / d * n
                    worst = max(worst, cert.size / limit)
                    if not cert.verify(g) or cert.size > limit:
                        res.fail(g, size=cert.size, limit=limit, seed=s)
        res.notes.update(failures=failures, worst_fraction_of_limit=round(worst, 4))
        if failures >= 0.2 * res.instances:
            res.fail(None, failures=failures, runs=res.instances)
    return [res]


def suite_reduction(max_n: int = 5) -> list[ClaimResult]:
    res, timer = _claim("pendant triangles shift the LD number by n over the domination number")
    with timer:
        for g in connected_graphs_upto(max_n):
            dom = domination_number(g)
            ld = gamma_ld(pendant_triangle_transform(g))[0]
            res.instances += 1
            if ld != dom + g.n:
                res.fail(g, domination=dom, gamma_ld_transformed=ld)
    return [res]


def h_graph_row(k: int, t: int, orient_cap: int = 20) -> dict:
    g = h_graph(k, t)
    report = bounds_report(g)
    named = {e.name: e for e in report.entries if e.name.startswith("h_graph")}
    row = {
        "k": k, "t": t, "n": g.n, "m": g.m,
        "upper_bound": float(named["h_graph_dominating"].value),
        "lower_bound": int(named["h_graph_transitive"].value),
        "gamma_bracket": [int(named["h_graph_pairs"].value), int(named["h_graph_v_side"].value)],
        "gamma_ld": gamma_ld(g)[0],
        "upper_dld": None,
    }
    if g.m <= orient_cap:
        row["upper_dld"] = upper_dld_exact(g, orient_cap)[0]
        row["ratio"] = row["upper_dld"] / row["gamma_ld"]
    return row


def suite_h_graphs(ks=(2, 3), ts=(2, 3), orient_cap: int = 20) -> list[ClaimResult]:
    res, timer = _claim("H_{k,t} sweep: exact values inside the reported brackets")
    with timer:
        rows = []
        for k in ks:
            for t in ts:
                row = h_graph_row(k, t, orient_cap)
                rows.append(row)
                res.instances += 1
                lo, hi = row["gamma_bracket"]
                if not lo <= row["gamma_ld"] <= hi:
                    res.fail(h_graph(k, t), **row)
                up = row["upper_dld"]
                if up is None:
                    continue
                if not row["lower_bound"] <= up <= row["upper_bound"]:
                    res.fail(h_graph(k, t), **row)
                # the worst orientation may exceed the LD bracket in general; H_{2,2} is pinned inside it
                if (k, t) == (2, 2) and not lo <= up <= hi:
                    res.fail(h_graph(k, t), **row)
        res.notes["rows"] = rows
        if not any(r["upper_dld"] is not None for r in rows):
            res.fail(None, reason="no instance within the orientation cap")
    return [res]


SUITES: dict[str, Callable[..., list[ClaimResult]]] = {
    "oracles": suite_oracles,
    "c4free": suite_c4free,
    "cliques": suite_cliques,
    "extremal": suite_extremal,
    "paths-cycles": suite_paths_cycles,
    "trees": suite_trees,
    "twin-free": suite_twin_free,
    "tree-bound": suite_tree_bound,
    "sandwich": suite_sandwich,
    "regular": suite_regular,
    "reduction": suite_reduction,
    "h-graphs": suite_h_graphs,
}

# suites whose size is driven by a single order limit
MAX_N_SUITES = {"oracles", "c4free", "extremal", "trees", "twin-free", "tree-bound", "sandwich", "reduction"}


def run_suite(name: str, max_n: int | None = None, seed: int | None = None) -> list[ClaimResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    kwargs = {}
    if max_n is not None and name in MAX_N_SUITES:
        kwargs["max_n"] = max_n
    if seed is not None and name in {"twin-free", "sandwich"}:
        kwargs["seed"] = seed
    return SUITES[name](**kwargs)
