"""Locating-dominating sets in trees and forests.

In a graph without 4-cycles two outside vertices can only share a code of
size one, so a set ``S`` is locating-dominating iff it is dominating and every
vertex of ``S`` is the *only* ``S``-neighbour of at most one outside vertex.
The dynamic programme below minimises ``|S|`` under that rule.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PreconditionError
from ..graph import Graph, components, is_forest, is_tree, iter_bits, tree_support_profile
from ..solver import LdCertificate, is_ld

INF = float("inf")

# vertex states
IN0 = "in0"      # in S, no private outside child
IN1 = "in1"      # in S, exactly one private outside child
OUT0 = "out0"    # outside, no S-child: needs the parent in S
OUT1F = "out1f"  # outside, one S-child which is still free to take it as private
OUT1X = "out1x"  # outside, one S-child that already has a private child: needs the parent in S
OUT2 = "out2"    # outside, two or more S-children

_IN_STATES = (IN0, IN1)
_OUT_STATES = (OUT0, OUT1F, OUT1X, OUT2)


def _best(options):
    """Cheapest ``(cost, choice)`` in a fixed preference order (first wins ties)."""
    best = (INF, ())
    for cost, choice in options:
        if cost < best[0]:
            best = (cost, choice)
    return best


def _solve_tree(g: Graph, root: int, vertices: list[int], forced_in: int, forced_out: int):
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in iter_bits(g.adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    children = {v: [w for w in iter_bits(g.adj[v]) if parent.get(w) == v] for v in order}
    table: dict[int, dict[str, tuple[float, tuple]]] = {}

    for v in reversed(order):
        kids = children[v]
        row: dict[str, tuple[float, tuple]] = {}
        can_in = not forced_out >> v & 1
        can_out = not forced_in >> v & 1
        if can_in:
            # each child: an S-state, a non-private outside state, or private (OUT0)
            agg = {0: (0, ()), 1: (INF, ())}
            for c in kids:
                t = table[c]
                shared = _best([(t[s][0], s) for s in (IN0, IN1, OUT1F, OUT1X, OUT2)])
                private = (t[OUT0][0], OUT0)
                agg = {
                    0: (agg[0][0] + shared[0], agg[0][1] + (shared[1],)),
                    1: _best([(agg[1][0] + shared[0], agg[1][1] + (shared[1],)),
                              (agg[0][0] + private[0], agg[0][1] + (private[1],))]),
                }
            row[IN0] = (1 + agg[0][0], agg[0][1])
            row[IN1] = (1 + agg[1][0], agg[1][1])
        if can_out:
            # S-children counted as: none / one free / one full / two or more
            agg = {"z": (0, ()), "f": (INF, ()), "x": (INF, ()), "t": (INF, ())}
            for c in kids:
                t = table[c]
                out_opt = _best([(t[s][0], s) for s in (OUT1F, OUT2)])
                in_free = (t[IN0][0], IN0)
                in_full = (t[IN1][0], IN1)
                in_any = _best([in_free, in_full])
                new = {
                    "z": (agg["z"][0] + out_opt[0], agg["z"][1] + (out_opt[1],)),
                    "f": _best([(agg["f"][0] + out_opt[0], agg["f"][1] + (out_opt[1],)),
                                (agg["z"][0] + in_free[0], agg["z"][1] + (in_free[1],))]),
                    "x": _best([(agg["x"][0] + out_opt[0], agg["x"][1] + (out_opt[1],)),
                                (agg["z"][0] + in_full[0], agg["z"][1] + (in_full[1],))]),
                    "t": _best([(agg["t"][0] + out_opt[0], agg["t"][1] + (out_opt[1],)),
                                (agg["t"][0] + in_any[0], agg["t"][1] + (in_any[1],)),
                                (agg["f"][0] + in_any[0], agg["f"][1] + (in_any[1],)),
                                (agg["x"][0] + in_any[0], agg["x"][1] + (in_any[1],))]),
                }
                agg = new
            row[OUT0] = agg["z"]
            row[OUT1F] = agg["f"]
            row[OUT1X] = agg["x"]
            row[OUT2] = agg["t"]
        for s in _IN_STATES + _OUT_STATES:
            row.setdefault(s, (INF, ()))
        table[v] = row

    # the root has no parent, so it cannot rely on one being in S
    cost, state = _best([(table[root][s][0], s) for s in (IN0, IN1, OUT1F, OUT2)])
    if cost == INF:
        return None
    chosen = 0
    stack = [(root, state)]
    while stack:
        v, s = stack.pop()
        if s in _IN_STATES:
            chosen |= 1 << v
        for c, cs in zip(children[v], table[v][s][1]):
            stack.append((c, cs))
    return chosen


def forest_min_ld(g: Graph, forced_in: int = 0, forced_out: int = 0) -> int | None:
    """Minimum LD set of a forest (vertex mask), or None if the constraints are infeasible."""
    if not is_forest(g):
        raise PreconditionError("forest_min_ld needs a forest")
    total = 0
    for comp in components(g):
        if len(comp) == 1:
            v = comp[0]
            if forced_out >> v & 1:
                return None
            total |= 1 << v
            continue
        part = _solve_tree(g, comp[0], comp, forced_in, forced_out)
        if part is None:
            return None
        total |= part
    return total


def normalized_tree_ld(t: Graph, keep_out: dict[int, int] | None = None) -> int:
    """Optimal LD set of a tree containing every support and all but one leaf per support.

    ``keep_out`` optionally picks, per support, which of its leaves stays outside.
    """
    prof = tree_support_profile(t)
    keep_out = dict(keep_out or {})
    forced_in = prof.supports
    forced_out = 0
    for s in iter_bits(prof.supports):
        leaves = t.adj[s] & prof.leaves
        u = keep_out.get(s, (leaves & -leaves).bit_length() - 1)
        forced_out |= 1 << u
        forced_in |= leaves & ~(1 << u)
    s = forest_min_ld(t, forced_in, forced_out)
    assert s is not None
    return s


def tree_bound(t: Graph) -> Fraction:
    prof = tree_support_profile(t)
    return Fraction(t.n + prof.l - prof.s - prof.sl, 2)


def tree_ld_construction(t: Graph) -> LdCertificate:
    """LD set of a tree within ``(n + l - s - sl)/2``.

    Support links are removed, the remaining forest is solved exactly with all
    supports in the set and one leaf per support left out, and the result is
    returned as a set for the whole tree.
    """
    if t.n < 2 or not is_tree(t):
        raise PreconditionError("tree_ld_construction needs a tree with at least 2 vertices")
    prof = tree_support_profile(t)
    links = prof.support_links
    keep = [v for v in range(t.n) if not links >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    forest = t.induced(keep)
    forced_in = forced_out = 0
    for s in iter_bits(prof.supports):
        leaves = t.adj[s] & prof.leaves
        u = (leaves & -leaves).bit_length() - 1
        forced_out |= 1 << pos[u]
        for x in iter_bits(leaves & ~(1 << u)):
            forced_in |= 1 << pos[x]
        forced_in |= 1 << pos[s]
    sol = forest_min_ld(forest, forced_in, forced_out)
    assert sol is not None
    chosen = sum(1 << keep[i] for i in iter_bits(sol))
    assert is_ld(t.adj, chosen), "forest solution is not locating-dominating in the tree"
    assert chosen.bit_count() <= tree_bound(t)
    return LdCertificate.build(t.adj, chosen)


def tree_gamma_ld(t: Graph) -> int:
    s = forest_min_ld(t)
    assert s is not None
    return s.bit_count()


# support-link closure -------------------------------------------------------


def _canonical(t: Graph) -> str:
    """Canonical string of an unrooted tree (AHU encoding rooted at the centre)."""
    if t.n == 1:
        return "()"
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] <= 1]
    left = t.n
    removed = 0
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            removed |= 1 << v
            for w in iter_bits(t.adj[v] & ~removed):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = [v for v in range(t.n) if not removed >> v & 1]

    def enc(v: int, p: int) -> str:
        return "(" + "".join(sorted(enc(w, v) for w in iter_bits(t.adj[v]) if w != p)) + ")"

    return min(enc(c, -1) for c in centres)


def is_in_TSL(t: Graph) -> bool:
    """Membership in the closure of the tight-tree family under support linking.

    A tree is in the base family if it is ``P_2`` or its LD number equals
    ``(n + l - s)/2``. A tree is support-linked from subtrees ``T_1..T_k``
    (``k >= 2``) through a vertex ``w`` adjacent to one support ``v_i`` of each.
    """
    if t.n < 2 or not is_tree(t):
        raise PreconditionError("is_in_TSL needs a tree with at least 2 vertices")
    return _in_closure(t, {})


def _in_closure(t: Graph, memo: dict[str, bool]) -> bool:
    key = _canonical(t)
    if key in memo:
        return memo[key]
    if t.n == 2:
        memo[key] = True
        return True
    prof = tree_support_profile(t)
    if 2 * tree_gamma_ld(t) == t.n + prof.l - prof.s:
        memo[key] = True
        return True
    memo[key] = False
    for w in iter_bits(prof.support_links):
        rest = [v for v in range(t.n) if v != w]
        forest = t.induced(rest)
        ok = True
        for comp in components(forest):
            anchor = [v for v in comp if t.has_edge(rest[v], w)]
            if len(anchor) != 1 or len(comp) < 2:
                ok = False
                break
            sub = forest.induced(comp)
            a = comp.index(anchor[0])
            # either endpoint of a two-vertex path may play the support
            if sub.n > 2 and not tree_support_profile(sub).supports >> a & 1:
                ok = False
                break
            if not _in_closure(sub, memo):
                ok = False
                break
        if ok:
            memo[key] = True
            return True
    return False
