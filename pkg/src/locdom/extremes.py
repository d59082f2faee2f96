"""Best and worst orientations: exact lower and upper directed LD numbers."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import CapExceededError, PreconditionError
from .graph import DEFAULT_ORIENT_CAP, Graph, Orientation, gray_codes
from .graph import has_c4_subgraph, is_complete_bipartite, is_connected, is_star
from .solver import DEFAULT_EXACT_CAP, LdCertificate, _info_lower_bound, gamma_ld_digraph, min_ld

CHUNK = 1 << 15
# above this order the per-orientation search beats scanning all subsets in numpy
NUMPY_MAX_N = 12


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("LD_THREADS", "1")))
    except ValueError:
        return 1


# lower directed LD number ---------------------------------------------------


def _assign_codes(adj: Sequence[int], s: int, free: list[int]) -> dict[int, int] | None:
    """Distinct nonempty codes ``c(v)`` with ``c(v) ⊆ N(v) ∩ s`` for every free vertex, or None.

    Kuhn's augmenting paths between free vertices and code values. Each vertex
    only ever needs its first ``len(free)`` candidate codes: if it were matched
    to a later one, one of the earlier ones is unused and could replace it.
    """
    limit = len(free)
    options: dict[int, list[int]] = {}
    for v in free:
        avail = adj[v] & s
        if not avail:
            return None
        opts = []
        sub = avail & -avail  # submasks of avail in increasing order, skipping 0
        while sub and len(opts) < limit:
            opts.append(sub)
            sub = (sub - avail) & avail
        options[v] = opts
    owner: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for c in options[v]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = v
                return True
        return False

    # most constrained vertices first keeps augmenting paths short
    for v in sorted(free, key=lambda x: len(options[x])):
        if not augment(v, set()):
            return None
    return {v: c for c, v in owner.items()}


def codes_feasible(g: Graph, s: int) -> bool:
    """Whether some orientation of ``g`` makes ``s`` a directed LD set."""
    free = [v for v in range(g.n) if not s >> v & 1]
    return _assign_codes(g.adj, s, free) is not None


def orientation_from_codes(g: Graph, s: int, codes: dict[int, int]) -> Orientation:
    """Arcs ``x -> v`` for ``x`` in the code of ``v``; other edges at ``v`` point into ``s`` or go low to high."""
    def tail(a: int, b: int) -> int:
        if b in codes and codes[b] >> a & 1:
            return a
        if a in codes and codes[a] >> b & 1:
            return b
        if s >> a & 1 and b in codes:
            return b
        if s >> b & 1 and a in codes:
            return a
        return a

    return Orientation.from_rule(g, tail)


def lower_dld_exact(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> tuple[int, LdCertificate]:
    """Minimum directed LD number over all orientations, with a witness orientation.

    Candidate sets are scanned by increasing size (lexicographically within a
    size); each is tested by code matching, not by enumerating orientations.
    """
    if g.n > cap:
        raise CapExceededError("vertex count for exact search", g.n, cap)
    forced = g.isolated_mask()
    others = [v for v in range(g.n) if not forced >> v & 1]
    lo = max(_info_lower_bound(g.n), forced.bit_count())
    for k in range(lo, g.n + 1):
        for extra in combinations(others, k - forced.bit_count()):
            s = forced
            for v in extra:
                s |= 1 << v
            free = [v for v in range(g.n) if not s >> v & 1]
            codes = _assign_codes(g.adj, s, free)
            if codes is not None:
                d = orientation_from_codes(g, s, codes)
                cert = LdCertificate.build(d.in_masks, s, d)
                assert cert.verify(g), "constructed orientation does not realise the codes"
                return k, cert
    raise AssertionError("V is always a directed LD set")


def lower_dld_via_spanning(g: Graph, cap: int = DEFAULT_ORIENT_CAP) -> int:
    """Minimum of the LD number over all spanning subgraphs (edge subsets)."""
    if g.m > cap:
        raise CapExceededError("edge count for spanning-subgraph enumeration", g.m, cap)
    floor = _info_lower_bound(g.n)
    best = g.n
    adj = [0] * g.n
    for code, b in gray_codes(g.m):
        if b >= 0:
            u, v = g.edges[b]
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
        if best == floor:
            break
        s = min_ld(adj, hi=best - 1)
        if s is not None:
            best = s.bit_count()
    return best


# upper directed LD number ---------------------------------------------------


def _batch_in_masks(g: Graph, dirs: np.ndarray) -> np.ndarray:
    ins = np.zeros((len(dirs), g.n), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        rev = (dirs >> i) & 1
        ins[:, v] |= (1 - rev) << u
        ins[:, u] |= rev << v
    return ins


def _batch_is_ld(ins: np.ndarray, n: int, s: int) -> np.ndarray:
    free = [v for v in range(n) if not s >> v & 1]
    if not free:
        return np.ones(len(ins), dtype=bool)
    codes = ins[:, free] & s
    ok = (codes != 0).all(axis=1)
    if len(free) > 1:
        codes = np.sort(codes, axis=1)
        ok &= (codes[:, 1:] != codes[:, :-1]).all(axis=1)
    return ok


def _batch_gamma_above(g: Graph, dirs: np.ndarray, floor: int) -> np.ndarray:
    """Directed LD number of each orientation, clamped below at ``floor``."""
    n = g.n
    ins = _batch_in_masks(g, dirs)
    out = np.full(len(dirs), floor, dtype=np.int64)
    alive = np.arange(len(dirs))
    for k in range(max(floor, 0), n + 1):
        found = np.zeros(len(alive), dtype=bool)
        sub = ins[alive]
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            rest = np.flatnonzero(~found)
            if not len(rest):
                break
            found[rest] |= _batch_is_ld(sub[rest], n, s)
        out[alive[found]] = k
        alive = alive[~found]
        if not len(alive):
            break
    return out


def _scan_numpy(g: Graph, start: int, stop: int, floor: int) -> tuple[int, int]:
    """Best ``(value, direction)`` over directions in ``[start, stop)``; value ``floor`` means none above it."""
    best, arg = floor, -1
    for lo in range(start, stop, CHUNK):
        dirs = np.arange(lo, min(stop, lo + CHUNK), dtype=np.int64)
        vals = _batch_gamma_above(g, dirs, best)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best, arg = int(vals[i]), int(dirs[i])
    return best, arg


def _scan_python(g: Graph, start: int, stop: int, floor: int) -> tuple[int, int]:
    best, arg = floor, -1
    for direction in range(start, stop):
        ins = Orientation(g, direction).in_masks
        if min_ld(ins, hi=best) is not None:
            continue
        s = min_ld(ins, lo=best + 1)
        best, arg = s.bit_count(), direction
    return best, arg


def _scan(args: tuple) -> tuple[int, int]:
    g, start, stop, floor = args
    if g.n <= NUMPY_MAX_N:
        return _scan_numpy(g, start, stop, floor)
    return _scan_python(g, start, stop, floor)


def upper_dld_exact(g: Graph, orient_cap: int = DEFAULT_ORIENT_CAP,
                    workers: int | None = None) -> tuple[int, Orientation, LdCertificate]:
    """Maximum directed LD number over all ``2**m`` orientations.

    Ties go to the orientation with the smallest direction bitstring. The
    direction space is split into contiguous ranges that may be scanned by a
    process pool (``LD_THREADS``); the merge is independent of scheduling.
    """
    if g.m > orient_cap:
        raise CapExceededError("edge count for orientation enumeration", g.m, orient_cap)
    total = 1 << g.m
    # orientation 0 seeds the search so every later value must beat a real one
    first, _ = gamma_ld_digraph(Orientation(g, 0), cap=max(g.n, DEFAULT_EXACT_CAP))
    workers = default_workers() if workers is None else workers
    if workers <= 1 or total <= 4 * CHUNK:
        results = [_scan((g, 1, total, first))]
    else:
        step = -(-total // workers)
        jobs = [(g, max(1, a), min(total, a + step), first) for a in range(0, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan, jobs))
    best, arg = first, 0
    for val, d in results:
        if val > best:
            best, arg = val, d
    d = Orientation(g, arg)
    value, cert = gamma_ld_digraph(d, cap=max(g.n, DEFAULT_EXACT_CAP))
    assert value == best
    return best, d, cert


def directed_ld_values(g: Graph, orient_cap: int = DEFAULT_ORIENT_CAP) -> list[int]:
    """Directed LD number of every orientation, indexed by direction bits (oracle helper)."""
    if g.m > orient_cap:
        raise CapExceededError("edge count for orientation enumeration", g.m, orient_cap)
    if g.n <= NUMPY_MAX_N:
        vals = []
        for lo in range(0, 1 << g.m, CHUNK):
            dirs = np.arange(lo, min(1 << g.m, lo + CHUNK), dtype=np.int64)
            vals.extend(int(x) for x in _batch_gamma_above(g, dirs, 0))
        return vals
    return [min_ld(Orientation(g, d).in_masks).bit_count() for d in range(1 << g.m)]


# extremal characterisations -------------------------------------------------


def _require_connected(g: Graph) -> None:
    if g.n < 2 or not is_connected(g):
        raise PreconditionError("needs a connected graph with at least 2 vertices")


def check_lower_extremal(g: Graph) -> bool:
    """Predicted: the lower directed LD number is ``n - 1`` iff ``n = 3`` or ``g`` is a star."""
    _require_connected(g)
    return g.n == 3 or is_star(g)


def check_upper_extremal(g: Graph) -> bool:
    """Predicted: the upper directed LD number is ``n - 1`` iff ``n = 3``, ``g`` is a star,
    or ``g`` is complete bipartite, possibly plus one universal vertex."""
    _require_connected(g)
    if g.n == 3 or is_star(g) or is_complete_bipartite(g):
        return True
    for w in range(g.n):
        if g.degree(w) == g.n - 1 and g.n >= 3 and is_complete_bipartite(g.remove_vertex(w)):
            return True
    return False


def edge_removal_monotone_check(g: Graph, orient_cap: int = DEFAULT_ORIENT_CAP) -> tuple[bool, tuple[int, int] | None]:
    """Check that deleting any edge never lowers the upper directed LD number.

    Returns ``(True, None)`` or ``(False, violating_edge)``.
    """
    if has_c4_subgraph(g):
        raise PreconditionError("edge-removal monotonicity is only claimed for graphs without a 4-cycle")
    full = upper_dld_exact(g, orient_cap)[0]
    for u, v in g.edges:
        if upper_dld_exact(g.remove_edge(u, v), orient_cap)[0] < full:
            return False, (u, v)
    return True, None

