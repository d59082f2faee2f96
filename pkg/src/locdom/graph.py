"""Simple undirected graphs, their orientations and structural predicates.

Vertex sets are Python ints used as bitsets (bit ``v`` set means vertex ``v``
is in the set). Edges are pairs ``(u, v)`` with ``u < v`` carrying a dense
index ``0..m-1`` fixed at construction time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CapExceededError, GraphValidationError, PreconditionError

DEFAULT_ORIENT_CAP = 20


def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``meta`` is free-form metadata (family name, parameters, numbering scheme)
    carried into reports; it does not take part in equality.
    """

    __slots__ = ("n", "adj", "edges", "_index", "meta")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), meta: Mapping | None = None):
        if n < 0:
            raise GraphValidationError(f"negative vertex count {n}")
        adj = [0] * n
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise GraphValidationError(f"duplicate edge ({u}, {v})")
            index[(u, v)] = len(norm)
            norm.append((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._index = index
        self.meta = dict(meta or {})

    # basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return to_list(self.adj[v])

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def isolated_mask(self) -> int:
        return mask_of(v for v in range(self.n) if not self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        name = self.meta.get("family")
        tag = f" {name}" if name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"

    # derived graphs ----------------------------------------------------

    def spanning_subgraph(self, edge_mask: int) -> Graph:
        """Spanning subgraph keeping the edges whose index bit is set in ``edge_mask``."""
        return Graph(self.n, [e for i, e in enumerate(self.edges) if edge_mask >> i & 1])

    def spanning_from_edges(self, edges: Iterable[Sequence[int]]) -> Graph:
        keep = []
        for u, v in edges:
            if not self.has_edge(u, v):
                raise PreconditionError(f"({u}, {v}) is not an edge of the host graph")
            keep.append((u, v))
        return Graph(self.n, keep)

    def remove_edge(self, u: int, v: int) -> Graph:
        i = self.edge_index(u, v)
        return Graph(self.n, self.edges[:i] + self.edges[i + 1:], self.meta)

    def remove_vertex(self, w: int) -> Graph:
        """Delete ``w``; vertices above ``w`` shift down by one."""
        def r(x: int) -> int:
            return x - 1 if x > w else x
        return Graph(self.n - 1, [(r(u), r(v)) for u, v in self.edges if w not in (u, v)])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])

    def square(self) -> Graph:
        """Graph joining every pair of vertices at distance 1 or 2."""
        edges = []
        for v in range(self.n):
            reach = self.adj[v]
            for w in iter_bits(self.adj[v]):
                reach |= self.adj[w]
            reach &= ~((1 << (v + 1)) - 1)
            edges.extend((v, w) for w in iter_bits(reach))
        return Graph(self.n, edges)

    def complement(self) -> Graph:
        full = self.all_mask
        edges = []
        for v in range(self.n):
            rest = full & ~self.adj[v] & ~((1 << (v + 1)) - 1)
            edges.extend((v, w) for w in iter_bits(rest))
        return Graph(self.n, edges)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g, meta: Mapping | None = None) -> Graph:
        nodes = sorted(g.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), [(pos[u], pos[v]) for u, v in g.edges()], meta)


# structure -------------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(to_list(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Return a proper 2-colouring as two masks, or None if ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    a = mask_of(v for v in range(g.n) if color[v] == 0)
    return a, g.all_mask & ~a


def is_star(g: Graph) -> bool:
    """K_{1,k} with k >= 1 (so K_2 counts as a star)."""
    if g.n < 2 or g.m != g.n - 1:
        return False
    return any(g.degree(v) == g.n - 1 for v in range(g.n))


def is_complete_bipartite(g: Graph) -> bool:
    """K_{a,b} with a, b >= 1."""
    if g.n < 2 or not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    a, b = parts
    return g.m == a.bit_count() * b.bit_count()


def is_regular(g: Graph) -> bool:
    return g.n > 0 and g.min_degree == g.max_degree


def find_twins(g: Graph) -> list[tuple[int, int]]:
    """All pairs ``(u, v)``, ``u < v``, with equal open or equal closed neighbourhoods."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v] or g.closed(u) == g.closed(v):
                out.append((u, v))
    return out


def is_twin_free(g: Graph) -> bool:
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v in range(g.n):
        if g.adj[v] in by_open or g.closed(v) in by_closed:
            return False
        by_open[g.adj[v]] = v
        by_closed[g.closed(v)] = v
    return True


def twin_classes(g: Graph) -> list[list[int]]:
    """Equivalence classes (size >= 2) of the open-twin and closed-twin relations."""
    groups: dict[tuple[str, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("o", g.adj[v]), []).append(v)
        groups.setdefault(("c", g.closed(v)), []).append(v)
    return [vs for vs in groups.values() if len(vs) >= 2]


def has_c4_subgraph(g: Graph) -> bool:
    """True iff some 4-cycle exists as a (not necessarily induced) subgraph."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] & g.adj[v]).bit_count() >= 2:
                return True
    return False


def four_cycles(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    """Each 4-cycle subgraph once, as ``(a, b, c, d)`` in cyclic order with ``a`` minimal."""
    for a in range(g.n):
        higher = ~((1 << (a + 1)) - 1)
        for c in range(a + 1, g.n):
            common = to_list(g.adj[a] & g.adj[c] & higher)
            for i, b in enumerate(common):
                for d in common[i + 1:]:
                    yield (a, b, c, d)


def pendant_triangle_transform(g: Graph) -> Graph:
    """Attach a pendant triangle to every vertex.

    Vertex ``i`` keeps its index; its two new triangle vertices are
    ``n + 2i`` and ``n + 2i + 1``.
    """
    n = g.n
    edges = list(g.edges)
    for i in range(n):
        a, b = n + 2 * i, n + 2 * i + 1
        edges += [(i, a), (i, b), (a, b)]
    return Graph(3 * n, edges, {"family": "pendant_triangle", "base_n": n,
                                "numbering": "i keeps index; triangle of i is n+2i, n+2i+1"})


# orientations ------------------------------------------------------------


class Orientation:
    """An orientation of a host graph.

    Bit ``i`` of ``direction`` describes edge ``host.edges[i] = (u, v)`` with
    ``u < v``: 0 means the arc ``u -> v``, 1 means ``v -> u``.
    """

    __slots__ = ("host", "direction", "_in", "_out")

    def __init__(self, host: Graph, direction: int = 0):
        if direction < 0 or direction >> host.m:
            raise GraphValidationError(f"direction bits {direction:#x} do not fit {host.m} edges")
        self.host = host
        self.direction = direction
        self._in: tuple[int, ...] | None = None
        self._out: tuple[int, ...] | None = None

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[Sequence[int]]) -> Orientation:
        """Build from a set of arcs ``(tail, head)``; every host edge must appear exactly once."""
        direction = 0
        seen = 0
        for t, h in arcs:
            if not host.has_edge(t, h):
                raise GraphValidationError(f"arc ({t}, {h}) is not an edge of the host")
            i = host.edge_index(t, h)
            if seen >> i & 1:
                raise GraphValidationError(f"edge {host.edges[i]} oriented twice")
            seen |= 1 << i
            if t > h:
                direction |= 1 << i
        if seen != (1 << host.m) - 1:
            missing = [host.edges[i] for i in range(host.m) if not seen >> i & 1]
            raise GraphValidationError(f"edges left unoriented: {missing[:5]}")
        return cls(host, direction)

    @classmethod
    def from_rule(cls, host: Graph, tail_of) -> Orientation:
        """Orient each edge ``(u, v)`` from ``tail_of(u, v)``."""
        direction = 0
        for i, (u, v) in enumerate(host.edges):
            t = tail_of(u, v)
            if t == v:
                direction |= 1 << i
            elif t != u:
                raise GraphValidationError(f"tail {t} is not an endpoint of ({u}, {v})")
        return cls(host, direction)

    @classmethod
    def from_hex(cls, host: Graph, text: str) -> Orientation:
        return cls(host, int(text, 16) if text else 0)

    def hex(self) -> str:
        return format(self.direction, "x")

    @property
    def n(self) -> int:
        return self.host.n

    def _build(self) -> None:
        ins = [0] * self.host.n
        outs = [0] * self.host.n
        d = self.direction
        for i, (u, v) in enumerate(self.host.edges):
            if d >> i & 1:
                u, v = v, u
            outs[u] |= 1 << v
            ins[v] |= 1 << u
        self._in = tuple(ins)
        self._out = tuple(outs)

    @property
    def in_masks(self) -> tuple[int, ...]:
        if self._in is None:
            self._build()
        return self._in  # type: ignore[return-value]

    @property
    def out_masks(self) -> tuple[int, ...]:
        if self._out is None:
            self._build()
        return self._out  # type: ignore[return-value]

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i, (u, v) in enumerate(self.host.edges):
            out.append((v, u) if self.direction >> i & 1 else (u, v))
        return out

    def tail(self, i: int) -> int:
        u, v = self.host.edges[i]
        return v if self.direction >> i & 1 else u

    def has_arc(self, t: int, h: int) -> bool:
        return bool(self.out_masks[t] >> h & 1)

    def sources(self) -> int:
        return mask_of(v for v in range(self.n) if not self.in_masks[v])

    def max_out_degree(self) -> int:
        return max((o.bit_count() for o in self.out_masks), default=0)

    def flipped(self, i: int) -> Orientation:
        return Orientation(self.host, self.direction ^ (1 << i))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.host == other.host and self.direction == other.direction

    def __hash__(self) -> int:
        return hash((self.host, self.direction))

    def __repr__(self) -> str:
        return f"<Orientation of {self.host!r} bits={self.hex()}>"


def gray_codes(m: int) -> Iterator[tuple[int, int]]:
    """Yield ``(code, flipped_bit)`` over all ``2**m`` Gray codes; first flipped bit is -1."""
    yield 0, -1
    code = 0
    for i in range(1, 1 << m):
        b = (i & -i).bit_length() - 1
        code ^= 1 << b
        yield code, b


def enumerate_orientations(g: Graph, cap: int = DEFAULT_ORIENT_CAP) -> Iterator[Orientation]:
    """All ``2**m`` orientations in Gray-code order (consecutive ones differ on one edge)."""
    if g.m > cap:
        raise CapExceededError("edge count for orientation enumeration", g.m, cap)
    for code, _ in gray_codes(g.m):
        yield Orientation(g, code)


def iter_in_masks(g: Graph, cap: int = DEFAULT_ORIENT_CAP) -> Iterator[tuple[int, list[int]]]:
    """Gray-code walk yielding ``(direction, in_masks)``; the list is updated in place."""
    if g.m > cap:
        raise CapExceededError("edge count for orientation enumeration", g.m, cap)
    ins = [0] * g.n
    for u, v in g.edges:
        ins[v] |= 1 << u
    for code, b in gray_codes(g.m):
        if b >= 0:
            u, v = g.edges[b]
            ins[u] ^= 1 << v
            ins[v] ^= 1 << u
        yield code, ins


# trees ---------------------------------------------------------------------


@dataclass(frozen=True)
class TreeSupportProfile:
    leaves: int
    supports: int
    support_links: int

    @property
    def l(self) -> int:  # noqa: E743
        return self.leaves.bit_count()

    @property
    def s(self) -> int:
        return self.supports.bit_count()

    @property
    def sl(self) -> int:
        return self.support_links.bit_count()


def support_profile(g: Graph) -> TreeSupportProfile:
    """Leaves, support vertices and support links of any graph.

    A component that is a single edge contributes its lower vertex as the
    support and its higher vertex as the leaf.
    """
    leaves = supports = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            w = g.adj[v].bit_length() - 1
            if g.degree(w) == 1 and w > v:
                continue  # K_2 component: lower endpoint is the support
            leaves |= 1 << v
            supports |= 1 << w
    links = 0
    for v in range(g.n):
        if (leaves | supports) >> v & 1 or not g.adj[v]:
            continue
        if g.adj[v] & ~supports == 0:
            links |= 1 << v
    return TreeSupportProfile(leaves, supports, links)


def tree_support_profile(t: Graph) -> TreeSupportProfile:
    if t.n < 2 or not is_tree(t):
        raise PreconditionError("tree_support_profile needs a tree with at least 2 vertices")
    return support_profile(t)
