"""Locating-dominating set verification and exact minimum LD sets.

A set ``S`` is locating-dominating when every vertex outside ``S`` has a
nonempty *code* (its neighbours in ``S``; in-neighbours for digraphs) and
these codes are pairwise distinct. The same machinery handles both cases: a
problem instance is just the per-vertex mask of vertices able to appear in
its code (``adj`` for graphs, ``in_masks`` for orientations).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceededError, GraphValidationError, PreconditionError
from .graph import Graph, Orientation, bit, iter_bits, mask_of, to_list
from .graph import is_connected, is_star

DEFAULT_EXACT_CAP = 40


def as_mask(s: int | Iterable[int]) -> int:
    return s if isinstance(s, int) else mask_of(s)


@dataclass(frozen=True)
class Violation:
    """Why a set fails: ``undominated`` (one vertex, empty code) or ``clash`` (two vertices, equal codes)."""

    kind: str
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "undominated":
            return f"vertex {self.vertices[0]} has an empty code"
        if self.kind == "code_mismatch":
            return f"stored codes disagree with the graph at {list(self.vertices)}"
        if self.kind == "host_mismatch":
            return "certificate orientation belongs to a different graph"
        return f"vertices {self.vertices[0]} and {self.vertices[1]} share a code"


@dataclass(frozen=True)
class LdCheck:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def first_violation(src: Sequence[int], s: int) -> Violation | None:
    """First failure in vertex order, or None when ``s`` is locating-dominating."""
    seen: dict[int, int] = {}
    for v, a in enumerate(src):
        if s >> v & 1:
            continue
        c = a & s
        if not c:
            return Violation("undominated", (v,))
        if c in seen:
            return Violation("clash", (seen[c], v))
        seen[c] = v
    return None


def is_ld(src: Sequence[int], s: int) -> bool:
    seen = set()
    for v, a in enumerate(src):
        if s >> v & 1:
            continue
        c = a & s
        if not c or c in seen:
            return False
        seen.add(c)
    return True


def is_ld_set_undirected(g: Graph, s: int | Iterable[int]) -> LdCheck:
    viol = first_violation(g.adj, as_mask(s))
    return LdCheck(viol is None, viol)


def is_ld_set_digraph(d: Orientation, s: int | Iterable[int]) -> LdCheck:
    viol = first_violation(d.in_masks, as_mask(s))
    return LdCheck(viol is None, viol)


# certificates ----------------------------------------------------------------


def _encode_code(vertex_code: int, members: Sequence[int]) -> int:
    return sum(1 << i for i, x in enumerate(members) if vertex_code >> x & 1)


def _decode_code(code: int, members: Sequence[int]) -> int:
    return sum(1 << x for i, x in enumerate(members) if code >> i & 1)


@dataclass(frozen=True)
class LdCertificate:
    """A set ``S`` with the code of every vertex outside it.

    ``codes[v]`` is a bitmask over positions in ``set`` (bit ``i`` means
    ``set[i]`` belongs to the code of ``v``). For directed claims
    ``orientation`` holds the digraph the codes live in.
    """

    set: tuple[int, ...]
    codes: dict[int, int] = field(default_factory=dict)
    orientation: Orientation | None = None

    @property
    def size(self) -> int:
        return len(self.set)

    @property
    def mask(self) -> int:
        return mask_of(self.set)

    def code_mask(self, v: int) -> int:
        """Code of ``v`` as a vertex bitmask."""
        return _decode_code(self.codes[v], self.set)

    @classmethod
    def build(cls, src: Sequence[int], s: int, orientation: Orientation | None = None) -> LdCertificate:
        members = tuple(to_list(s))
        codes = {v: _encode_code(a & s, members) for v, a in enumerate(src) if not s >> v & 1}
        return cls(members, codes, orientation)

    def verify(self, g: Graph) -> LdCheck:
        """Re-check against ``g`` (or ``self.orientation`` when present): stored codes must be exact."""
        if self.orientation is not None:
            if self.orientation.host != g:
                return LdCheck(False, Violation("host_mismatch", ()))
            src = self.orientation.in_masks
        else:
            src = g.adj
        s = self.mask
        outside = [v for v in range(g.n) if not s >> v & 1]
        if sorted(self.codes) != outside:
            return LdCheck(False, Violation("code_mismatch", tuple(sorted(set(outside) ^ set(self.codes)))))
        for v in outside:
            if self.code_mask(v) != src[v] & s:
                return LdCheck(False, Violation("code_mismatch", (v,)))
        codes = list(self.codes.values())
        if len(set(codes)) != len(codes) or 0 in codes:
            viol = first_violation(src, s)
            return LdCheck(False, viol)
        return LdCheck(True)

    def to_json(self) -> dict:
        return {
            "set": list(self.set),
            "orientation": None if self.orientation is None else self.orientation.hex(),
            "codes": {str(v): c for v, c in sorted(self.codes.items())},
        }

    @classmethod
    def from_json(cls, data: dict, host: Graph) -> LdCertificate:
        try:
            members = tuple(sorted(int(x) for x in data["set"]))
            orient = data.get("orientation")
            o = None if orient is None else Orientation.from_hex(host, orient)
            codes = {int(k): int(c) for k, c in data.get("codes", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphValidationError(f"malformed certificate: {exc}") from None
        return cls(members, codes, o)


# exact search ------------------------------------------------------------------


def _info_lower_bound(n: int) -> int:
    """Smallest ``k`` with ``n - k <= 2**k - 1`` (enough distinct nonempty codes)."""
    k = 0
    while n - k > (1 << k) - 1:
        k += 1
    return k


def min_ld(src: Sequence[int], forced_in: int = 0, forced_out: int = 0,
           lo: int = 0, hi: int | None = None) -> int | None:
    """Lexicographically smallest minimum-size LD set with ``lo <= |S| <= hi``.

    ``forced_in`` vertices must belong to ``S`` and ``forced_out`` vertices must
    not. Returns None if no such set exists. Vertices are decided in index
    order; the code of a vertex is checked as soon as every vertex that can
    contribute to it has been decided.
    """
    n = len(src)
    if hi is None:
        hi = n
    for v in range(n):
        if not src[v]:
            forced_in |= 1 << v
    if forced_in & forced_out:
        return None
    settle_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        settle_at[(src[v] | 1 << v).bit_length() - 1].append(v)
    # forced_after[i] = number of forced-in vertices with index >= i
    forced_after = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        forced_after[i] = forced_after[i + 1] + (forced_in >> i & 1)
    lo = max(lo, forced_after[0], _info_lower_bound(n))
    codes: set[int] = set()

    def settle(i: int, s: int) -> list[int] | None:
        added = []
        for v in settle_at[i]:
            if s >> v & 1:
                continue
            c = src[v] & s
            if not c or c in codes:
                for a in added:
                    codes.discard(a)
                return None
            codes.add(c)
            added.append(c)
        return added

    def rec(i: int, s: int, size: int, k: int) -> int | None:
        if i == n:
            return s
        b = 1 << i
        if size < k and not forced_out & b:
            s2 = s | b
            added = settle(i, s2)
            if added is not None:
                r = rec(i + 1, s2, size + 1, k)
                if r is not None:
                    return r
                for a in added:
                    codes.discard(a)
        if not forced_in & b and forced_after[i + 1] <= k - size:
            added = settle(i, s)
            if added is not None:
                r = rec(i + 1, s, size, k)
                if r is not None:
                    return r
                for a in added:
                    codes.discard(a)
        return None

    for k in range(lo, hi + 1):
        codes.clear()
        r = rec(0, 0, 0, k)
        if r is not None:
            return r
    return None


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError("vertex count for exact search", n, cap)


def gamma_ld(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> tuple[int, LdCertificate]:
    """Location-domination number with a lexicographically smallest optimal set."""
    _check_cap(g.n, cap)
    s = min_ld(g.adj)
    assert s is not None
    return s.bit_count(), LdCertificate.build(g.adj, s)


def gamma_ld_digraph(d: Orientation, cap: int = DEFAULT_EXACT_CAP) -> tuple[int, LdCertificate]:
    """Directed location-domination number; sources are always in the set."""
    _check_cap(d.n, cap)
    s = min_ld(d.in_masks)
    assert s is not None
    return s.bit_count(), LdCertificate.build(d.in_masks, s, d)


def k_domination_number(g: Graph, k: int, cap: int = DEFAULT_EXACT_CAP) -> tuple[int, list[int]]:
    """Smallest ``S`` such that every vertex outside ``S`` has at least ``k`` neighbours in ``S``."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_cap(g.n, cap)
    n = g.n
    forced = mask_of(v for v in range(n) if g.degree(v) < k)
    settle_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        settle_at[g.closed(v).bit_length() - 1].append(v)

    def ok(i: int, s: int) -> bool:
        return all(s >> v & 1 or (g.adj[v] & s).bit_count() >= k for v in settle_at[i])

    def rec(i: int, s: int, size: int, budget: int) -> int | None:
        if i == n:
            return s
        b = 1 << i
        if size < budget:
            s2 = s | b
            if ok(i, s2):
                r = rec(i + 1, s2, size + 1, budget)
                if r is not None:
                    return r
        if not forced & b and ok(i, s):
            return rec(i + 1, s, size, budget)
        return None

    for budget in range(forced.bit_count(), n + 1):
        r = rec(0, 0, 0, budget)
        if r is not None:
            return budget, to_list(r)
    raise AssertionError("V is always k-dominating")


def is_k_dominating(g: Graph, s: int | Iterable[int], k: int) -> bool:
    s = as_mask(s)
    return all(s >> v & 1 or (g.adj[v] & s).bit_count() >= k for v in range(g.n))


def digraph_attains_n_minus_1(d: Orientation) -> bool:
    """Structural test for an oriented graph whose directed LD number is ``n - 1``.

    True iff ``n = 3``, the underlying graph is a star, or the vertices split
    into independent sets ``S1``, ``S2`` and a set ``C`` with ``|C| <= 1`` such
    that the arcs are exactly all arcs ``S1 -> C ∪ S2`` and ``C -> S2``.
    """
    g = d.host
    if g.n < 2 or not is_connected(g):
        raise PreconditionError("digraph_attains_n_minus_1 needs a connected digraph with n >= 2")
    if g.n == 3 or is_star(g):
        return True
    ins, outs = d.in_masks, d.out_masks
    full = g.all_mask
    for c in [None, *range(g.n)]:
        cmask = 0 if c is None else bit(c)
        rest = full & ~cmask
        s1 = mask_of(v for v in iter_bits(rest) if not ins[v])
        s2 = mask_of(v for v in iter_bits(rest) if not outs[v])
        if s1 | s2 != rest or s1 & s2:
            continue
        good = all(outs[v] == cmask | s2 and not ins[v] for v in iter_bits(s1))
        good = good and all(ins[v] == s1 | cmask for v in iter_bits(s2))
        if c is not None:
            good = good and ins[c] == s1 and outs[c] == s2
        if good:
            return True
    return False
