"""Small directed LD sets for (nearly) regular graphs.

``greedy_distinct_subsets`` turns any set ``X`` that every outside vertex sees
at least ``log2(max degree) + 1`` times into a directed LD set by choosing
distinct codes greedily. ``regular_random_construction`` samples such an ``X``
of size ``O(n log(d)/d)``. ``regular_matching_construction`` builds one of size
at most the matching number in a ``d``-regular graph (``d >= 3``).
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field

from ..errors import ConstructionError, PreconditionError
from ..graph import Graph, Orientation, is_regular, iter_bits, mask_of
from ..params import matching_number
from ..solver import LdCertificate, as_mask, first_violation
from .basic import orient_spanning_ld

log = logging.getLogger(__name__)


def required_hits(max_degree: int) -> float:
    """Neighbours in ``X`` each outside vertex needs: ``log2(max degree) + 1``."""
    return math.log2(max_degree) + 1 if max_degree > 0 else 1


def greedy_distinct_subsets(g: Graph, x) -> tuple[Orientation, LdCertificate]:
    """Orientation in which ``x`` is a directed LD set.

    Outside vertices are handled in index order. Each takes the first code, in
    mask order, that contains its smallest neighbour in ``x`` and is unused.
    Code members point into the vertex, every other ``x``-neighbour is pointed at.
    """
    x = as_mask(x)
    need = required_hits(g.max_degree)
    for v in range(g.n):
        if not x >> v & 1 and (g.adj[v] & x).bit_count() < need:
            raise PreconditionError(
                f"vertex {v} has {(g.adj[v] & x).bit_count()} neighbours in X, needs at least {need:g}")
    used: set[int] = set()
    codes: dict[int, int] = {}
    for v in range(g.n):
        if x >> v & 1:
            continue
        avail = g.adj[v] & x
        anchor = avail & -avail
        rest = avail & ~anchor
        sub = 0
        while True:
            if anchor | sub not in used:
                break
            sub = (sub - rest) & rest
            if sub == 0:
                raise ConstructionError(f"no unused code left for vertex {v}")
        codes[v] = anchor | sub
        used.add(codes[v])

    def tail(a: int, b: int) -> int:
        if b in codes and x >> a & 1:
            return a if codes[b] >> a & 1 else b
        if a in codes and x >> b & 1:
            return b if codes[a] >> b & 1 else a
        return a

    d = Orientation.from_rule(g, tail)
    cert = LdCertificate.build(d.in_masks, x, d)
    check = cert.verify(g)
    assert check, f"greedy codes do not verify: {check.violation}"
    return d, cert


@dataclass(frozen=True)
class RandomizedConfig:
    """``c`` scales the sampling probability ``6c log2(d)/d``; ``p`` overrides it outright."""

    c: float = 2.0
    seed: int | None = None
    max_retries: int = 64
    p: float | None = None

    def __post_init__(self):
        if self.c < 2:
            raise ValueError("c must be at least 2")
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")
        if self.p is not None and not 0 < self.p <= 1:
            raise ValueError("p must lie in (0, 1]")


@dataclass
class RandomizedReport:
    seed: int | None
    p: float
    attempts: list[dict] = field(default_factory=list)
    size: int = 0
    ratio: float = 0.0

    def to_json(self) -> dict:
        return {"seed": self.seed, "p": self.p, "attempts": self.attempts,
                "size": self.size, "ratio": self.ratio}


def regular_random_construction(g: Graph, cfg: RandomizedConfig = RandomizedConfig()
                                ) -> tuple[Orientation, LdCertificate, RandomizedReport]:
    """Sample ``X``, add every vertex that sees fewer than ``c log2(d)`` of it, then assign codes.

    An attempt is retried if ``|X|`` exceeds ``25c log2(d)/d * n`` or some outside
    vertex has too few neighbours in ``X``. ``d`` is the minimum degree.
    """
    delta, big = g.min_degree, g.max_degree
    if delta < 8:
        raise PreconditionError(
            f"minimum degree {delta} < 8; use the matching or twin-free constructions instead")
    lg = math.log2(delta)
    p = cfg.p if cfg.p is not None else min(1.0, 6 * cfg.c * lg / delta)
    threshold = cfg.c * lg
    need = max(threshold, required_hits(big))
    ceiling = 25 * cfg.c * lg / delta * g.n
    rng = random.Random(cfg.seed)
    report = RandomizedReport(cfg.seed, p)
    for attempt in range(cfg.max_retries):
        x = mask_of(v for v in range(g.n) if rng.random() < p)
        sampled = x.bit_count()
        x |= mask_of(v for v in range(g.n) if (g.adj[v] & x).bit_count() < threshold)
        short = [v for v in range(g.n) if not x >> v & 1 and (g.adj[v] & x).bit_count() < need]
        stats = {"attempt": attempt, "sampled": sampled, "enriched": x.bit_count(), "short": len(short)}
        report.attempts.append(stats)
        log.debug("random construction attempt %d: |X| %d -> %d, %d short", attempt, sampled,
                  x.bit_count(), len(short))
        if short or x.bit_count() > ceiling:
            continue
        d, cert = greedy_distinct_subsets(g, x)
        report.size = cert.size
        report.ratio = cert.size / (lg / delta * g.n)
        return d, cert, report
    raise ConstructionError(
        f"no suitable set after {cfg.max_retries} attempts (last: {report.attempts[-1]})")


def regular_matching_construction(g: Graph) -> tuple[Graph, LdCertificate, Orientation]:
    """LD set of size ``alpha'`` for a spanning subgraph of a ``d``-regular graph, ``d >= 3``.

    Returns the spanning subgraph, the undirected certificate on it and the
    corresponding orientation of ``g``.
    """
    if not is_regular(g) or g.n == 0 or g.max_degree < 3:
        raise PreconditionError("needs a d-regular graph with d >= 3")
    size, matching = matching_number(g)
    matched = mask_of(v for e in matching for v in e)
    free = g.all_mask & ~matched
    chosen = 0
    for u, v in matching:
        u_sees, v_sees = bool(g.adj[u] & free), bool(g.adj[v] & free)
        chosen |= 1 << (v if v_sees and not u_sees else u)
    in_matching = {e for e in matching}
    edges = [e for e in g.edges
             if not (matched >> e[0] & 1 and matched >> e[1] & 1) or e in in_matching]
    adj = [0] * g.n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    # duplicate codes can only occur among unmatched vertices, which see only matched ones
    for w in iter_bits(free):
        code = adj[w] & chosen
        others = {adj[y] & chosen for y in iter_bits(free) if y != w}
        if code not in others:
            continue
        sub = code
        replacement = None
        while sub:
            if sub.bit_count() >= 2 and sub not in others:
                replacement = sub
                break
            sub = (sub - 1) & code
        if replacement is None:
            raise ConstructionError(f"no spare code for unmatched vertex {w}")
        for y in iter_bits(code & ~replacement):
            adj[w] &= ~(1 << y)
            adj[y] &= ~(1 << w)
    h = Graph(g.n, [(a, b) for a, b in g.edges if adj[a] >> b & 1])
    bad = first_violation(h.adj, chosen)
    if bad is not None:
        raise ConstructionError(f"matching construction left a violation: {bad}")
    cert = LdCertificate.build(h.adj, chosen)
    assert cert.size == size
    d, _ = orient_spanning_ld(g, h, chosen)
    return h, cert, d
