"""Generators for the graph families used throughout the package.

Every generated graph carries ``meta`` with the family name, its parameters
and a one-line description of the vertex numbering.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _check(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)],
                 {"family": "path", "params": [n], "numbering": "0-1-...-(n-1)"})


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)],
                 {"family": "cycle", "params": [n], "numbering": "0-1-...-(n-1)-0"})


def star(n: int) -> Graph:
    """Star on ``n`` vertices (``K_{1,n-1}``), centre 0."""
    _check(n >= 2, "star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)],
                 {"family": "star", "params": [n], "numbering": "centre 0, leaves 1..n-1"})


def complete(n: int) -> Graph:
    _check(n >= 1, "complete needs n >= 1")
    return Graph(n, combinations(range(n), 2),
                 {"family": "complete", "params": [n], "numbering": "0..n-1"})


def empty(n: int) -> Graph:
    _check(n >= 0, "empty needs n >= 0")
    return Graph(n, [], {"family": "empty", "params": [n], "numbering": "0..n-1"})


def complete_bipartite(a: int, b: int) -> Graph:
    _check(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)],
                 {"family": "complete_bipartite", "params": [a, b],
                  "numbering": "side A = 0..a-1, side B = a..a+b-1"})


def cartesian_complete(m: int) -> Graph:
    """``K_m □ K_m``: vertex ``(i, j)`` is ``i*m + j``; adjacent iff same row or same column."""
    _check(m >= 1, "cartesian_complete needs m >= 1")
    edges = []
    for i in range(m):
        for j1, j2 in combinations(range(m), 2):
            edges.append((i * m + j1, i * m + j2))
            edges.append((j1 * m + i, j2 * m + i))
    return Graph(m * m, edges, {"family": "cartesian_complete", "params": [m],
                                "numbering": "(row i, column j) -> i*m + j"})


def h_graph(k: int, t: int) -> Graph:
    """Twin-free graph built from ``K_t □ K_k`` plus one pendant clique layer.

    Vertices ``u(i, j)`` and ``v(i, j)`` for ``0 <= i < k``, ``0 <= j < t``;
    ``u(i, j) = i*t + j`` and ``v(i, j) = k*t + i*t + j``. The ``u`` vertices with
    a common ``j`` or a common ``i`` form cliques, the ``v`` vertices with a
    common ``j`` form cliques, and each ``u(i, j)`` is matched to ``v(i, j)``.
    """
    _check(k >= 2 and t >= 2, "h_graph needs k, t >= 2")
    kt = k * t

    def u(i, j):
        return i * t + j

    def v(i, j):
        return kt + i * t + j

    edges = []
    for j in range(t):
        for i1, i2 in combinations(range(k), 2):
            edges.append((u(i1, j), u(i2, j)))
            edges.append((v(i1, j), v(i2, j)))
    for i in range(k):
        for j1, j2 in combinations(range(t), 2):
            edges.append((u(i, j1), u(i, j2)))
    for i in range(k):
        for j in range(t):
            edges.append((u(i, j), v(i, j)))
    return Graph(2 * kt, edges, {"family": "h_graph", "params": [k, t],
                                 "numbering": "u(i,j) = i*t + j, v(i,j) = k*t + i*t + j"})


def g_pq(p: int, q: int) -> Graph:
    """``p`` disjoint ``P_4`` all joined to every vertex of a ``q``-cycle (order ``4p + q``)."""
    _check(p >= q >= 4, "g_pq needs p >= q >= 4")
    c0 = 4 * p
    edges = []
    for r in range(p):
        base = 4 * r
        edges += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
    for i in range(q):
        edges.append((c0 + i, c0 + (i + 1) % q))
    for x in range(c0):
        for i in range(q):
            edges.append((x, c0 + i))
    return Graph(4 * p + q, edges, {"family": "g_pq", "params": [p, q],
                                    "numbering": "path r = 4r..4r+3, cycle = 4p..4p+q-1"})


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner, {"family": "petersen", "params": [],
                                              "numbering": "outer 0..4, inner 5..9 (i ~ i+5)"})


def random_regular(d: int, n: int, seed: int | None = None) -> Graph:
    """Uniform-ish random ``d``-regular graph (pairing model with rejection, via networkx)."""
    import networkx as nx

    _check(n * d % 2 == 0 and 0 <= d < n, "random_regular needs n*d even and d < n")
    g = nx.random_regular_graph(d, n, seed=seed)
    return Graph.from_networkx(g, {"family": "random_regular", "params": [d, n], "seed": seed,
                                   "numbering": "networkx node labels"})


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cartesian_complete": (cartesian_complete, 1),
    "h_graph": (h_graph, 2),
    "g_pq": (g_pq, 2),
    "petersen": (petersen, 0),
    "random_regular": (random_regular, 3),
}


def make_family(name: str, *params: int) -> Graph:
    try:
        fn, arity = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"family {name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family_spec(text: str) -> Graph:
    """``"cycle=7"``, ``"h_graph=3,3"`` or ``"petersen"``."""
    name, _, rest = text.partition("=")
    params = [int(x) for x in rest.replace(" ", ",").split(",") if x] if rest else []
    return make_family(name.strip(), *params)
