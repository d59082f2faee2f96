"""Direct constructions: orienting undirected LD sets, matchings, cliques and forced sources."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError
from ..graph import Graph, Orientation, iter_bits, mask_of
from ..params import is_independent, matching_number, two_distance_independence
from ..solver import DEFAULT_EXACT_CAP, LdCertificate, as_mask, first_violation, gamma_ld_digraph


def _checked(g: Graph, d: Orientation, s: int) -> LdCertificate:
    cert = LdCertificate.build(d.in_masks, s, d)
    check = cert.verify(g)
    assert check, f"construction produced an invalid certificate: {check.violation}"
    return cert


def orient_from_undirected_ld(g: Graph, s) -> tuple[Orientation, LdCertificate]:
    """Orient every edge between ``s`` and the rest away from ``s``; codes are unchanged."""
    s = as_mask(s)
    bad = first_violation(g.adj, s)
    if bad is not None:
        raise PreconditionError(f"set is not locating-dominating: {bad}")

    def tail(a: int, b: int) -> int:
        return b if s >> b & 1 and not s >> a & 1 else a

    d = Orientation.from_rule(g, tail)
    return d, _checked(g, d, s)


def orient_spanning_ld(g: Graph, h: Graph, s) -> tuple[Orientation, LdCertificate]:
    """Turn an LD set of a spanning subgraph ``h`` into a directed LD set of ``g``.

    Edges of ``h`` between ``s`` and the rest point away from ``s``; such
    edges of ``g`` missing from ``h`` point into ``s``. In-codes then equal the
    codes in ``h``.
    """
    s = as_mask(s)
    if h.n != g.n or any(h.adj[v] & ~g.adj[v] for v in range(g.n)):
        raise PreconditionError("h must be a spanning subgraph of g")
    bad = first_violation(h.adj, s)
    if bad is not None:
        raise PreconditionError(f"set is not locating-dominating in the subgraph: {bad}")

    def tail(a: int, b: int) -> int:
        ina, inb = s >> a & 1, s >> b & 1
        if ina == inb:
            return a
        inside, outside = (a, b) if ina else (b, a)
        return inside if h.has_edge(a, b) else outside

    d = Orientation.from_rule(g, tail)
    return d, _checked(g, d, s)


def matching_construction(g: Graph) -> tuple[Orientation, LdCertificate]:
    """Directed LD set of size ``n - matching number``.

    The lower endpoint of each matched edge and every unmatched vertex form the
    set; matched edges point out of it, other crossing edges point into it.
    """
    size, matching = matching_number(g)
    chosen = mask_of(u for u, _ in matching)
    matched = mask_of(x for e in matching for x in e)
    chosen |= g.all_mask & ~matched
    mate = {v: u for u, v in matching}

    def tail(a: int, b: int) -> int:
        ina, inb = chosen >> a & 1, chosen >> b & 1
        if ina == inb:
            return a
        inside, outside = (a, b) if ina else (b, a)
        return inside if mate.get(outside) == inside else outside

    d = Orientation.from_rule(g, tail)
    cert = _checked(g, d, chosen)
    assert cert.size == g.n - size
    return d, cert


def clique_code_size(n: int) -> int:
    """Smallest ``k`` with ``n <= k + 2**k - 1``."""
    k = 0
    while n > k + (1 << k) - 1:
        k += 1
    return k


def clique_subset_construction(n: int) -> tuple[Orientation, LdCertificate]:
    """Orientation of ``K_n`` with a directed LD set of size ``clique_code_size(n)``.

    ``S = {0..k-1}``; vertex ``k + i`` receives arcs from exactly the members
    of ``S`` in the binary expansion of ``i + 1``.
    """
    if n < 2:
        raise PreconditionError("clique_subset_construction needs n >= 2")
    from ..families import complete

    g = complete(n)
    k = clique_code_size(n)
    s = (1 << k) - 1

    def tail(a: int, b: int) -> int:
        # a < b always, so only a can be in S when the edge crosses
        if a < k <= b:
            return a if (b - k + 1) >> a & 1 else b
        return a

    d = Orientation.from_rule(g, tail)
    cert = _checked(g, d, s)
    assert cert.size == k
    return d, cert


@dataclass(frozen=True)
class TournamentWitness:
    orientation: Orientation
    value: int
    verified: bool
    certificate: LdCertificate | None = None


def transitive_tournament_witness(n: int, cap: int = DEFAULT_EXACT_CAP) -> TournamentWitness:
    """The transitive tournament on ``n`` vertices, whose directed LD number is ``ceil(n/2)``.

    Above ``cap`` the value is returned unverified.
    """
    if n < 2:
        raise PreconditionError("transitive_tournament_witness needs n >= 2")
    from ..families import complete

    d = Orientation(complete(n), 0)
    expected = -(-n // 2)
    if n > cap:
        return TournamentWitness(d, expected, False)
    value, cert = gamma_ld_digraph(d, cap)
    assert value == expected, f"transitive tournament on {n} vertices has value {value}"
    return TournamentWitness(d, value, True, cert)


def source_forcing_orientation(g: Graph, x) -> Orientation:
    """Every edge at the independent set ``x`` points away from it, so ``x`` are sources."""
    x = as_mask(x)
    if not is_independent(g, x):
        u = next(v for v in iter_bits(x) if g.adj[v] & x)
        w = (g.adj[u] & x).bit_length() - 1
        raise PreconditionError(f"set is not independent: edge {min(u, w)}-{max(u, w)}")

    def tail(a: int, b: int) -> int:
        return b if x >> b & 1 else a

    return Orientation.from_rule(g, tail)


def worst_upper_witness(g: Graph, d: Orientation) -> LdCertificate:
    """Directed LD set of ``d`` of size at most ``n - alpha_2``.

    From a maximum set of vertices with pairwise disjoint closed
    neighbourhoods, each member contributes one vertex left outside the set:
    an out-neighbour if it has one, else itself (unless it is isolated).
    """
    _, far = two_distance_independence(g)
    outs = d.out_masks
    left_out = 0
    for u in far:
        if outs[u]:
            left_out |= outs[u] & -outs[u]
        elif g.adj[u]:
            left_out |= 1 << u
    s = g.all_mask & ~left_out
    cert = _checked(g, d, s)
    return cert
