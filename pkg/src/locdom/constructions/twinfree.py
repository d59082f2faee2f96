"""Orientations of twin-free graphs with a directed LD set of at most ``n/2`` vertices.

Pipeline per component:

1. a spanning tree ``T`` that is a fixed point of two exchange moves which
   lower ``l(T) - s(T)`` (leaves minus supports);
2. an auxiliary spanning subgraph ``G'``: ``T`` plus the edges from leaves of
   multi-leaf supports to other supports, pruned so that every support keeps
   exactly one pendant leaf;
3. ``C'`` an optimal tree LD set holding every support and all but that
   pendant leaf; ``C = (C' minus leaves) + (support links with a twin in G')``;
4. ``C`` is checked in ``G'`` and turned into an orientation of ``g``.

If the check fails at a fixed point the search falls back to any improving
single-edge swap, and for small components to all spanning trees.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..errors import ConstructionError, PreconditionError
from ..graph import Graph, Orientation, components, find_twins, is_twin_free, iter_bits, support_profile
from ..solver import LdCertificate, first_violation
from .basic import orient_spanning_ld
from .trees import normalized_tree_ld

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 10


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _tree(n: int, edges) -> Graph:
    return Graph(n, sorted(edges))


def _excess(t: Graph) -> int:
    prof = support_profile(t)
    return prof.l - prof.s


def _bfs_tree(g: Graph) -> set[tuple[int, int]]:
    seen = 1
    order = [0]
    edges = set()
    for v in order:
        for w in iter_bits(g.adj[v] & ~seen):
            seen |= 1 << w
            order.append(w)
            edges.add(_edge(v, w))
    return edges


def _rehang_move(g: Graph, edges: set) -> set | None:
    """Move a leaf of a multi-leaf support to another neighbour if that lowers the excess."""
    t = _tree(g.n, edges)
    prof = support_profile(t)
    base = prof.l - prof.s
    for s in iter_bits(prof.supports):
        leaves = t.adj[s] & prof.leaves
        if leaves.bit_count() < 2:
            continue
        for u in iter_bits(leaves):
            for x in iter_bits(g.adj[u] & ~(1 << s)):
                cand = (edges - {_edge(u, s)}) | {_edge(u, x)}
                if _excess(_tree(g.n, cand)) < base:
                    return cand
    return None


def _path_edges(t: Graph, a: int, b: int) -> list[tuple[int, int]]:
    parent = {a: -1}
    order = [a]
    for v in order:
        if v == b:
            break
        for w in iter_bits(t.adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    path = []
    while parent[b] != -1:
        path.append(_edge(b, parent[b]))
        b = parent[b]
    return path


def _improving_swap(g: Graph, edges: set) -> set | None:
    """Any single exchange ``T - e + f`` with strictly smaller excess."""
    t = _tree(g.n, edges)
    base = _excess(t)
    for f in g.edges:
        if f in edges:
            continue
        for e in _path_edges(t, *f):
            cand = (edges - {e}) | {f}
            if _excess(_tree(g.n, cand)) < base:
                return cand
    return None


@dataclass
class _Attempt:
    chosen: int
    aux: Graph
    clash: tuple[int, int] | None = None
    ok: bool = False


def _build(g: Graph, edges: set) -> _Attempt:
    n = g.n
    t = _tree(n, edges)
    prof = support_profile(t)
    added: dict[int, set] = {}
    for s in iter_bits(prof.supports):
        leaves = t.adj[s] & prof.leaves
        if leaves.bit_count() < 2:
            continue
        for u in iter_bits(leaves):
            added[u] = {_edge(u, x) for x in iter_bits(g.adj[u] & prof.supports & ~(1 << s))}
    keep_out = {}
    for s in iter_bits(prof.supports):
        leaves = list(iter_bits(t.adj[s] & prof.leaves))
        pendant = [u for u in leaves if not added.get(u)]
        if not pendant:
            pendant = [leaves[0]]
            added[leaves[0]] = set()
        keep_out[s] = pendant[0]
    aux_edges = set(edges)
    for extra in added.values():
        aux_edges |= extra
    aux = _tree(n, aux_edges)
    chosen = normalized_tree_ld(t, keep_out) & ~prof.leaves
    for a, b in find_twins(aux):
        for x in (a, b):
            if prof.support_links >> x & 1:
                chosen |= 1 << x
    bad = first_violation(aux.adj, chosen)
    att = _Attempt(chosen, aux)
    if bad is None:
        att.ok = chosen.bit_count() <= n // 2
    elif bad.kind == "clash":
        att.clash = tuple(bad.vertices[:2])
    return att


def _clash_move(g: Graph, edges: set, att: _Attempt) -> set | None:
    """For a leaf ``u`` sharing its code with an inner vertex ``v``: ``T - u1 v + u u2``."""
    if att.clash is None:
        return None
    t = _tree(g.n, edges)
    prof = support_profile(t)
    a, b = att.clash
    if prof.leaves >> b & 1:
        a, b = b, a
    u, v = a, b
    if not prof.leaves >> u & 1 or (prof.leaves | prof.supports | prof.support_links | att.chosen) >> v & 1:
        return None
    u1 = t.adj[u].bit_length() - 1
    others = att.aux.adj[u] & att.chosen & ~(1 << u1)
    if not others or _edge(u1, v) not in edges:
        return None
    u2 = (others & -others).bit_length() - 1
    cand = (edges - {_edge(u1, v)}) | {_edge(u, u2)}
    if _excess(_tree(g.n, cand)) >= _excess(t):
        return None
    return cand


def _solve_connected(g: Graph) -> tuple[int, Graph]:
    edges = _bfs_tree(g)
    moves = 0
    while True:
        nxt = _rehang_move(g, edges)
        if nxt is not None:
            edges, moves = nxt, moves + 1
            continue
        att = _build(g, edges)
        if att.ok:
            log.debug("twin-free construction: n=%d, %d exchange moves", g.n, moves)
            return att.chosen, att.aux
        nxt = _clash_move(g, edges, att) or _improving_swap(g, edges)
        if nxt is None:
            break
        edges, moves = nxt, moves + 1
    if g.n <= EXHAUSTIVE_MAX_N:
        found = _exhaustive(g)
        if found is not None:
            log.debug("twin-free construction: n=%d solved by spanning-tree enumeration", g.n)
            return found
    raise ConstructionError(
        f"no locating spanning-tree configuration found for a component of order {g.n} "
        f"(local fixed point reached after {moves} moves)")


def _exhaustive(g: Graph) -> tuple[int, Graph] | None:
    import networkx as nx

    ranked = []
    for tr in nx.SpanningTreeIterator(g.to_networkx()):
        edges = {_edge(a, b) for a, b in tr.edges}
        ranked.append((_excess(_tree(g.n, edges)), sorted(edges)))
    ranked.sort()
    for _, edges in ranked:
        att = _build(g, set(edges))
        if att.ok:
            return att.chosen, att.aux
    return None


def twin_free_half_construction(g: Graph) -> tuple[Orientation, LdCertificate]:
    """Orientation of a twin-free graph without isolated vertices and a directed LD set of size ``<= n/2``."""
    if g.n == 0:
        raise PreconditionError("empty graph")
    if g.isolated_mask():
        raise PreconditionError(f"isolated vertex {(g.isolated_mask() & -g.isolated_mask()).bit_length() - 1}")
    if not is_twin_free(g):
        a, b = find_twins(g)[0]
        raise PreconditionError(f"graph has twins {a} and {b}")
    chosen = 0
    aux_edges = []
    for comp in components(g):
        sub = g.induced(comp)
        part, aux = _solve_connected(sub)
        chosen |= sum(1 << comp[i] for i in iter_bits(part))
        aux_edges.extend((comp[a], comp[b]) for a, b in aux.edges)
    aux = Graph(g.n, aux_edges)
    d, cert = orient_spanning_ld(g, aux, chosen)
    assert cert.size <= g.n // 2, f"set of size {cert.size} exceeds n/2 for n={g.n}"
    return d, cert
