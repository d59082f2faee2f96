"""Small-graph corpora: exhaustive connected graphs, trees and seeded random samples."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .graph import Graph, is_connected, is_twin_free

ATLAS_MAX_N = 7


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    return tuple(Graph.from_networkx(h) for h in nx.graph_atlas_g())


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs of order ``n`` up to isomorphism (``1 <= n <= 7``, networkx atlas)."""
    if not 1 <= n <= ATLAS_MAX_N:
        raise ValueError(f"the exhaustive corpus covers orders 1..{ATLAS_MAX_N}")
    return [g for g in _atlas() if g.n == n and is_connected(g)]


def connected_graphs_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def twin_free_connected(n: int) -> list[Graph]:
    """All twin-free connected graphs of order ``n <= 8``.

    Order 8 is built by adding a vertex with every possible neighbourhood to
    each connected 7-vertex graph and removing isomorphic copies.
    """
    if n <= ATLAS_MAX_N:
        return [g for g in connected_graphs(n) if is_twin_free(g)]
    if n != ATLAS_MAX_N + 1:
        raise ValueError("twin-free corpus is exhaustive only up to order 8")
    import networkx as nx

    buckets: dict[str, list] = {}
    out = []
    for base in connected_graphs(ATLAS_MAX_N):
        for nb in range(1, 1 << ATLAS_MAX_N):
            edges = list(base.edges) + [(v, ATLAS_MAX_N) for v in range(ATLAS_MAX_N) if nb >> v & 1]
            g = Graph(n, edges)
            if not is_twin_free(g):
                continue
            h = g.to_networkx()
            key = nx.weisfeiler_lehman_graph_hash(h)
            seen = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in seen):
                continue
            seen.append(h)
            out.append(g)
    return out


def trees(n: int) -> list[Graph]:
    """All trees of order ``n`` up to isomorphism."""
    import networkx as nx

    if n == 1:
        return [Graph(1)]
    return [Graph.from_networkx(t, {"family": "tree"}) for t in nx.nonisomorphic_trees(n)]


def trees_upto(max_n: int, min_n: int = 2) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from trees(n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(count: int, max_n: int, seed: int, max_m: int | None = None,
                  min_n: int = 1) -> list[Graph]:
    """``count`` random graphs with order in ``[min_n, max_n]`` and edge probability uniform in (0, 1).

    Graphs with more than ``max_m`` edges are resampled.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        g = random_graph(n, rng.random(), rng)
        if max_m is not None and g.m > max_m:
            continue
        out.append(g)
    return out


def random_twin_free_graphs(count: int, max_n: int, seed: int, min_n: int = 2) -> list[Graph]:
    """Random connected twin-free graphs (rejection sampling on a random density)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        # sparse-to-moderate densities; very dense graphs are almost never twin-free
        p = rng.uniform(1.5, max(2.0, min(n - 1, 12))) / max(n - 1, 1)
        g = random_graph(n, min(p, 0.9), rng)
        if g.m and is_connected(g) and is_twin_free(g):
            out.append(g)
    return out
