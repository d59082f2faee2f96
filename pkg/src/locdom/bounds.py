"""Bounds engine: every known bound on the three LD quantities for one graph.

Entries that do not apply (wrong class, missing flag, size cap) are kept with a
reason so a report shows what was considered and why it was skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import CapExceededError, ParseError
from .graph import Graph, bipartition, has_c4_subgraph, is_regular, is_tree, is_twin_free
from .graph import tree_support_profile
from .io import to_graph6
from .params import (DEFAULT_PARAM_CAP, chromatic_number, clique_number, independence_number,
                     mad, matching_number, two_distance_independence)
from .solver import DEFAULT_EXACT_CAP, _info_lower_bound, gamma_ld, k_domination_number

TARGETS = ("gamma_ld", "lower_dld", "upper_dld")
FLOAT_TOL = 1e-9


def ceil_log2(x: int) -> int:
    """Exact ``ceil(log2(x))`` for ``x >= 1``."""
    return (x - 1).bit_length()


@dataclass
class ClassFlags:
    """Class membership supplied by the caller; none of these is detected."""

    planar: bool = False
    outerplanar: bool = False
    perfect: bool = False
    chi_bounded: float | None = None
    hamiltonian_path: list[int] | None = None
    path_factor: list[list[int]] | None = None

    @classmethod
    def parse(cls, text: str | None) -> ClassFlags:
        """``"planar,perfect,chi_bounded=2,hampath=0-1-2,factor=0-1-2/3-4"``."""
        flags = cls()
        if not text:
            return flags
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            key, _, val = item.partition("=")
            try:
                if key in ("planar", "outerplanar", "perfect") and not val:
                    setattr(flags, key, True)
                elif key == "chi_bounded":
                    flags.chi_bounded = float(val)
                elif key == "hampath":
                    flags.hamiltonian_path = [int(x) for x in val.split("-")]
                elif key == "factor":
                    flags.path_factor = [[int(x) for x in p.split("-")] for p in val.split("/")]
                else:
                    raise ValueError
            except ValueError:
                raise ParseError(f"bad class flag {item!r}") from None
        return flags

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class BoundEntry:
    name: str
    target: str
    direction: str  # "lower" or "upper"
    value: Fraction | float | None
    citation: str
    applicable: bool
    reason: str = ""

    @property
    def rational(self) -> bool:
        return not isinstance(self.value, float)

    def admits(self, exact: int) -> bool:
        """Whether ``exact`` is on the allowed side of this bound."""
        if not self.applicable or self.value is None:
            return True
        tol = 0 if self.rational else FLOAT_TOL
        if self.direction == "lower":
            return exact >= self.value - tol
        return exact <= self.value + tol

    def to_json(self) -> dict:
        v = self.value
        if isinstance(v, Fraction):
            v = [v.numerator, v.denominator]
        return {"name": self.name, "target": self.target, "direction": self.direction,
                "value": v, "rational": self.rational, "citation": self.citation,
                "applicable": self.applicable, "reason": self.reason}


@dataclass
class BoundsReport:
    graph_id: str
    params: dict
    entries: list[BoundEntry] = field(default_factory=list)

    def applicable(self, target: str, direction: str | None = None) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.target == target
                and (direction is None or e.direction == direction)]

    def best(self, target: str) -> tuple[Fraction | float | None, Fraction | float | None]:
        """Tightest applicable ``(lower, upper)`` pair for ``target``."""
        lows = [e.value for e in self.applicable(target, "lower")]
        ups = [e.value for e in self.applicable(target, "upper")]
        return (max(lows) if lows else None, min(ups) if ups else None)

    def violations(self, exact: dict[str, int]) -> list[BoundEntry]:
        """Applicable entries contradicted by the exact values given."""
        return [e for e in self.entries if e.target in exact and not e.admits(exact[e.target])]

    def to_json(self) -> dict:
        return {"graph": self.graph_id, "params": self.params,
                "entries": [e.to_json() for e in self.entries]}


class _Lazy:
    """Parameters computed on first use; a cap refusal is remembered as a reason."""

    def __init__(self, g: Graph, exact_cap: int, param_cap: int):
        self.g = g
        self.exact_cap = exact_cap
        self.param_cap = param_cap
        self._vals: dict[str, object] = {}

    def get(self, key: str, fn: Callable[[], object]):
        if key not in self._vals:
            try:
                self._vals[key] = fn()
            except CapExceededError as exc:
                self._vals[key] = exc
        return self._vals[key]

    def alpha(self):
        return self.get("alpha", lambda: independence_number(self.g, self.param_cap)[0])

    def omega(self):
        return self.get("omega", lambda: clique_number(self.g, self.param_cap)[0])

    def alpha2(self):
        return self.get("alpha2", lambda: two_distance_independence(self.g, self.param_cap)[0])

    def matching(self):
        return self.get("matching", lambda: matching_number(self.g)[0])

    def mad(self):
        return self.get("mad", lambda: mad(self.g))

    def chi3(self):
        return self.get("chi3", lambda: chromatic_number(self.g, 3, self.param_cap).value)

    def gamma(self):
        return self.get("gamma_ld", lambda: gamma_ld(self.g, self.exact_cap)[0])

    def gamma_k(self, k: int):
        return self.get(f"gamma_{k}", lambda: k_domination_number(self.g, k, self.exact_cap)[0])

    def known(self) -> dict:
        out = {}
        for k, v in self._vals.items():
            if isinstance(v, CapExceededError):
                continue
            out[k] = [v.numerator, v.denominator] if isinstance(v, Fraction) else v
        return out


def _is_spanning_path(g: Graph, order: list[int]) -> bool:
    return (sorted(order) == list(range(g.n))
            and all(g.has_edge(a, b) for a, b in zip(order, order[1:])))


def _is_path_factor(g: Graph, paths: list[list[int]]) -> bool:
    flat = [v for p in paths for v in p]
    return (sorted(flat) == list(range(g.n)) and all(p for p in paths)
            and all(g.has_edge(a, b) for p in paths for a, b in zip(p, p[1:])))


def bounds_report(g: Graph, flags: ClassFlags | None = None, exact_cap: int = DEFAULT_EXACT_CAP,
                  param_cap: int = DEFAULT_PARAM_CAP) -> BoundsReport:
    flags = flags or ClassFlags()
    lz = _Lazy(g, exact_cap, param_cap)
    n, m = g.n, g.m
    delta_max, delta_min = g.max_degree, g.min_degree
    entries: list[BoundEntry] = []
    isolated = g.isolated_mask()
    c4 = has_c4_subgraph(g)

    def add(name, target, direction, citation, cond, reason, value_fn):
        """``cond`` False -> inapplicable with ``reason``; a cap refusal inside ``value_fn`` too."""
        if not cond:
            entries.append(BoundEntry(name, target, direction, None, citation, False, reason))
            return
        try:
            value = value_fn()
        except _Missing as exc:
            entries.append(BoundEntry(name, target, direction, None, citation, False, str(exc)))
            return
        entries.append(BoundEntry(name, target, direction, value, citation, True))

    def need(x):
        if isinstance(x, CapExceededError):
            raise _Missing(str(x))
        return x

    F = Fraction

    # undirected LD number
    add("code_count", "gamma_ld", "lower", "distinct nonempty codes: n - k <= 2^k - 1",
        n >= 1, "empty graph", lambda: F(_info_lower_bound(n)))
    add("degree_share", "gamma_ld", "lower", "share counting: 2n/(Delta+3)",
        n >= 1, "empty graph", lambda: F(2 * n, delta_max + 3))
    add("non_isolated_removed", "gamma_ld", "upper", "V minus one non-isolated vertex",
        m >= 1, "no edges", lambda: F(n - 1))
    is_t = n >= 2 and is_tree(g)
    prof = tree_support_profile(g) if is_t else None
    add("tree_support_links", "gamma_ld", "upper", "(n + l - s - sl)/2 for trees",
        is_t, "not a tree with n >= 2", lambda: F(n + prof.l - prof.s - prof.sl, 2))
    add("tree_supports", "gamma_ld", "upper", "(n + l - s)/2 for trees",
        is_t, "not a tree with n >= 2", lambda: F(n + prof.l - prof.s, 2))
    is_h = g.meta.get("family") == "h_graph"
    hk, ht = g.meta.get("params", [0, 0]) if is_h else (0, 0)
    add("h_graph_pairs", "gamma_ld", "lower", "one of every v/u pair across a column clique: (k-1)t",
        is_h, "not an H_{k,t} family graph", lambda: F((hk - 1) * ht))
    add("h_graph_v_side", "gamma_ld", "upper", "all v vertices: kt",
        is_h, "not an H_{k,t} family graph", lambda: F(hk * ht))

    # lower directed LD number
    add("code_count", "lower_dld", "lower", "distinct nonempty codes: n - k <= 2^k - 1",
        n >= 1, "empty graph", lambda: F(_info_lower_bound(n)))
    add("undirected_ld", "lower_dld", "upper", "orient S -> V \\ S for an undirected LD set S",
        n >= 1, "empty graph", lambda: F(need(lz.gamma())))
    add("matching", "lower_dld", "upper", "matched edges leave one endpoint each: n - alpha'",
        True, "", lambda: F(n - need(lz.matching())))
    add("planar", "lower_dld", "lower", "planar class bound (n+10)/7 carried to orientations",
        flags.planar and n >= 6, "planar flag not set" if not flags.planar else "needs n >= 6",
        lambda: F(n + 10, 7))
    add("outerplanar", "lower_dld", "lower", "outerplanar class bound (2n+3)/7 carried to orientations",
        flags.outerplanar, "outerplanar flag not set", lambda: F(2 * n + 3, 7))
    add("degree_share", "lower_dld", "lower", "share counting: 2n/(Delta+3)",
        n >= 1, "empty graph", lambda: F(2 * n, delta_max + 3))
    add("twin_free_half", "lower_dld", "upper", "spanning tree construction: n/2",
        n >= 1 and not isolated and is_twin_free(g), "twins or isolated vertices present",
        lambda: F(n, 2))
    hp = flags.hamiltonian_path
    hp_ok = hp is not None and _is_spanning_path(g, hp)
    add("hamiltonian_path", "lower_dld", "upper", "spanning path: ceil(2n/5)",
        hp_ok, "no Hamiltonian path witness" if hp is None else "witness is not a Hamiltonian path",
        lambda: F(-(-2 * n // 5)))
    pf = flags.path_factor
    pf_ok = pf is not None and _is_path_factor(g, pf)
    add("path_factor", "lower_dld", "upper", "spanning path factor: sum of ceil(2 m_i/5)",
        pf_ok, "no path factor supplied" if pf is None else "supplied paths are not a path factor",
        lambda: F(sum(-(-2 * len(p) // 5) for p in pf)))
    d_reg = is_regular(g) and delta_max >= 3
    add("regular_matching", "lower_dld", "upper", "d-regular with d >= 3: alpha'",
        d_reg, "not d-regular with d >= 3", lambda: F(need(lz.matching())))
    kdom = ceil_log2(delta_max) + 1 if delta_max >= 1 else None
    add("k_domination", "lower_dld", "upper", "k-dominating set with k = ceil(log2 Delta) + 1",
        kdom is not None, "no edges", lambda: F(need(lz.gamma_k(kdom))))
    add("independent_complement", "lower_dld", "upper", "min degree >= log2 Delta + 1: n - alpha",
        delta_min >= 1 and (1 << (delta_min - 1)) >= delta_max, "needs 2^(delta-1) >= Delta",
        lambda: F(n - need(lz.alpha())))
    add("c4free_undirected", "lower_dld", "lower", "no 4-cycle: equals the undirected LD number",
        n >= 1 and not c4, "has a 4-cycle subgraph", lambda: F(need(lz.gamma())))

    # upper directed LD number
    add("independent_sources", "upper_dld", "lower", "independent set oriented outward: alpha",
        True, "", lambda: F(need(lz.alpha())))
    add("transitive_clique", "upper_dld", "lower", "clique oriented transitively: ceil(omega/2)",
        True, "", lambda: F(-(-need(lz.omega()) // 2)))
    add("out_degree_share", "upper_dld", "lower", "low out-degree orientation: 2n/ceil(mad/2 + 3)",
        n >= 1, "empty graph", lambda: F(2 * n, math.ceil(need(lz.mad()) / 2) + 3))
    add("two_distance", "upper_dld", "upper", "remove one vertex per 2-distance independent vertex: n - alpha2",
        n >= 1 and not isolated, "isolated vertices present", lambda: F(n - need(lz.alpha2())))
    add("clique_tournament", "upper_dld", "upper", "locate inside a maximum clique: n - floor(omega/2)",
        n >= 1, "empty graph", lambda: F(n - need(lz.omega()) // 2))
    add("average_degree", "upper_dld", "upper", "Caro-Wei on the complement: n - floor(n/(2n - 2ad))",
        n >= 1, "empty graph", lambda: F(n - math.floor(F(n) / (2 * n - F(2 * m, n)))))
    add("non_source_removed", "upper_dld", "upper", "V minus one non-source vertex: n - 1",
        m >= 1, "no edges", lambda: F(n - 1))
    add("c4free_undirected", "upper_dld", "lower", "no 4-cycle: at least the undirected LD number",
        n >= 1 and not c4, "has a 4-cycle subgraph", lambda: F(need(lz.gamma())))
    add("c4free_matching", "upper_dld", "upper", "no 4-cycle: n - alpha'",
        not c4, "has a 4-cycle subgraph", lambda: F(n - need(lz.matching())))
    bip = bipartition(g) is not None
    for direction in ("lower", "upper"):
        add("bipartite_c4free", "upper_dld", direction, "bipartite without 4-cycle: equals alpha",
            bip and not c4, "not bipartite or has a 4-cycle", lambda: F(need(lz.alpha())))
    add("log_degree_ratio", "upper_dld", "lower", "gamma_LD / (ceil(log2 Delta) + 1)",
        delta_max >= 1 and n >= 1, "no edges",
        lambda: F(need(lz.gamma()), ceil_log2(delta_max) + 1))

    def chi3_value():
        chi = need(lz.chi3())
        if chi is None:
            raise _Missing("chromatic number exceeds 3")
        return F(need(lz.gamma()))

    add("three_colourable", "upper_dld", "lower", "colour-ordered orientation of a 3-colouring: gamma_LD",
        n >= 1, "empty graph", chi3_value)
    c = flags.chi_bounded
    add("chi_bounded", "upper_dld", "lower", "chi <= omega^c: 2^(-c/(c+1)) n^(1/(c+1))",
        c is not None and c > 0, "chi_bounded flag not set",
        lambda: 2 ** (-c / (c + 1)) * n ** (1 / (c + 1)))
    add("perfect", "upper_dld", "lower", "perfect graphs: sqrt(n/2)",
        flags.perfect, "perfect flag not set", lambda: math.sqrt(n / 2))
    add("h_graph_transitive", "upper_dld", "lower", "transitive v-cliques: t*ceil(k/2)",
        is_h, "not an H_{k,t} family graph", lambda: F(ht * -(-hk // 2)))
    add("h_graph_dominating", "upper_dld", "upper", "kt/2 + 2k log2(t+1) + t log2(k+1)",
        is_h, "not an H_{k,t} family graph",
        lambda: hk * ht / 2 + 2 * hk * math.log2(ht + 1) + ht * math.log2(hk + 1))
    is_cc = g.meta.get("family") == "cartesian_complete"
    cm = g.meta.get("params", [0])[0] if is_cc else 0
    add("rook_graph_clique", "upper_dld", "lower", "K_m x K_m: omega = m",
        is_cc, "not a K_m x K_m family graph", lambda: F(cm))
    add("rook_graph_dominating", "upper_dld", "upper", "K_m x K_m: 3m log2(m+1)",
        is_cc, "not a K_m x K_m family graph", lambda: 3 * cm * math.log2(cm + 1))

    report = BoundsReport(to_graph6(g), {"n": n, "m": m, "min_degree": delta_min,
                                         "max_degree": delta_max}, entries)
    report.params.update(lz.known())
    return report


class _Missing(Exception):
    pass
