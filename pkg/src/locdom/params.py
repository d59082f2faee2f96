"""Exact structural parameters: independence, matching, cliques, colouring, densities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError, PreconditionError
from .graph import Graph, iter_bits, mask_of, to_list

DEFAULT_PARAM_CAP = 40


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(f"vertex count for {what}", g.n, cap)


def _greedy_color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Sequential colouring of ``cand``; vertices listed by colour class with their colour number."""
    order, colors = [], []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique_mask(adj: tuple[int, ...], cand: int | None = None) -> int:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    if cand is None:
        cand = (1 << len(adj)) - 1
    best = 0
    best_size = 0

    def expand(clique: int, size: int, p: int) -> None:
        nonlocal best, best_size
        order, colors = _greedy_color_order(adj, p)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best_size:
                return
            v = order[idx]
            c2 = clique | (1 << v)
            p2 = p & adj[v]
            if p2:
                expand(c2, size + 1, p2)
            elif size + 1 > best_size:
                best, best_size = c2, size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best


def clique_number(g: Graph, cap: int = DEFAULT_PARAM_CAP) -> tuple[int, list[int]]:
    _check_cap(g, cap, "clique number")
    s = max_clique_mask(g.adj)
    return s.bit_count(), to_list(s)


def independence_number(g: Graph, cap: int = DEFAULT_PARAM_CAP) -> tuple[int, list[int]]:
    _check_cap(g, cap, "independence number")
    s = max_clique_mask(g.complement().adj)
    return s.bit_count(), to_list(s)


def two_distance_independence(g: Graph, cap: int = DEFAULT_PARAM_CAP) -> tuple[int, list[int]]:
    """Largest set of vertices pairwise at distance greater than 2."""
    _check_cap(g, cap, "2-distance independence number")
    return independence_number(g.square(), cap)


def vertex_cover_number(g: Graph, cap: int = DEFAULT_PARAM_CAP) -> int:
    """Minimum vertex cover size, ``n - alpha``."""
    return g.n - independence_number(g, cap)[0]


def matching_number(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    import networkx as nx

    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    edges = sorted((min(u, v), max(u, v)) for u, v in mate)
    return len(edges), edges


def is_independent(g: Graph, s) -> bool:
    s = s if isinstance(s, int) else mask_of(s)
    return all(not g.adj[v] & s for v in iter_bits(s))


def is_clique(g: Graph, s) -> bool:
    s = s if isinstance(s, int) else mask_of(s)
    return all(s & ~(1 << v) & ~g.adj[v] == 0 for v in iter_bits(s))


def is_two_distance_independent(g: Graph, s) -> bool:
    s = list(iter_bits(s)) if isinstance(s, int) else list(s)
    return all(not g.closed(u) & g.closed(v) for i, u in enumerate(s) for v in s[i + 1:])


def is_matching(g: Graph, edges) -> bool:
    used = 0
    for u, v in edges:
        if not g.has_edge(u, v) or used >> u & 1 or used >> v & 1:
            return False
        used |= 1 << u | 1 << v
    return True


def is_proper_coloring(g: Graph, coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def color_with(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with colours ``0..k-1``, or None if none exists."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then highest degree
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in iter_bits(g.adj[v]) if color[w] >= 0})
            kv = (sat, g.degree(v), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {color[w] for w in iter_bits(g.adj[v])}
        # a fresh colour is tried only once, which removes colour symmetry
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            color[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return list(color) if rec(0, 0) else None


@dataclass(frozen=True)
class ChromaticResult:
    """``value`` is the chromatic number if it is at most ``limit``, else None."""

    value: int | None
    coloring: list[int] | None
    limit: int

    @property
    def exceeds_limit(self) -> bool:
        return self.value is None


def chromatic_number(g: Graph, limit: int = 3, cap: int = DEFAULT_PARAM_CAP) -> ChromaticResult:
    _check_cap(g, cap, "chromatic number")
    for k in range(0 if g.n == 0 else 1, limit + 1):
        col = color_with(g, k)
        if col is not None:
            return ChromaticResult(k, col, limit)
    return ChromaticResult(None, None, limit)


def average_degree(g: Graph) -> Fraction:
    return Fraction(2 * g.m, g.n) if g.n else Fraction(0)


def _densest_for(g: Graph, p: int, q: int) -> int:
    """Vertex mask maximising ``q*e(H) - p*v(H)`` (empty mask if the maximum is 0)."""
    import networkx as nx

    net = nx.DiGraph()
    net.add_node("s")
    net.add_node("t")
    for i, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", i), capacity=q)
        net.add_edge(("e", i), ("v", u))
        net.add_edge(("e", i), ("v", v))
    for v in range(g.n):
        net.add_edge(("v", v), "t", capacity=p)
    _, (side, _) = nx.minimum_cut(net, "s", "t")
    return mask_of(x[1] for x in side if isinstance(x, tuple) and x[0] == "v")


def _edges_within(g: Graph, s: int) -> int:
    return sum((g.adj[v] & s).bit_count() for v in iter_bits(s)) // 2


def densest_subgraph(g: Graph) -> tuple[Fraction, list[int]]:
    """Maximum of ``e(H)/v(H)`` over subgraphs, with a vertex set attaining it (Dinkelbach iteration)."""
    if g.m == 0:
        return Fraction(0), ([0] if g.n else [])
    best = g.all_mask
    ratio = Fraction(g.m, g.n)
    while True:
        h = _densest_for(g, ratio.numerator, ratio.denominator)
        if not h:
            return ratio, to_list(best)
        r = Fraction(_edges_within(g, h), h.bit_count())
        if r <= ratio:
            return ratio, to_list(best)
        best, ratio = h, r


def mad(g: Graph) -> Fraction:
    """Maximum average degree ``max 2e(H)/v(H)`` as an exact fraction."""
    return 2 * densest_subgraph(g)[0]


@dataclass(frozen=True)
class GraphParams:
    """Exact parameters of one graph.

    ``beta`` is the minimum vertex cover size, so that ``alpha + beta = n``.
    ``chi`` is None when not computed or when it exceeds ``chi_limit``.
    """

    n: int
    m: int
    min_degree: int
    max_degree: int
    alpha: int
    matching: int
    alpha2: int
    omega: int
    beta: int
    ad: Fraction
    mad: Fraction
    chi: int | None = None
    chi_limit: int | None = None

    def to_json(self) -> dict:
        out = {}
        for k, v in self.__dict__.items():
            out[k] = [v.numerator, v.denominator] if isinstance(v, Fraction) else v
        return out


def graph_params(g: Graph, cap: int = DEFAULT_PARAM_CAP, chi_limit: int | None = 3) -> GraphParams:
    if g.n == 0:
        raise PreconditionError("parameters of the empty graph on 0 vertices are not defined")
    alpha = independence_number(g, cap)[0]
    chi = None
    if chi_limit is not None:
        chi = chromatic_number(g, chi_limit, cap).value
    return GraphParams(
        n=g.n, m=g.m, min_degree=g.min_degree, max_degree=g.max_degree,
        alpha=alpha,
        matching=matching_number(g)[0],
        alpha2=two_distance_independence(g, cap)[0],
        omega=clique_number(g, cap)[0],
        beta=g.n - alpha,
        ad=average_degree(g),
        mad=mad(g),
        chi=chi, chi_limit=chi_limit,
    )
