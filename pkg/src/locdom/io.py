"""graph6 and edge-list text formats."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterator

from .errors import GraphValidationError, ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("graph6: empty input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6: byte {pos} ({ch!r}) outside the printable range 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, start = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, start = vals[1] << 12 | vals[2] << 6 | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        start = 8
    else:
        raise ParseError("graph6: truncated vertex-count header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[start:]
    if len(body) != need:
        raise ParseError(f"graph6: expected {need} data bytes after byte {start - 1}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError(f"graph6: nonzero padding bits in byte {start + need - 1}")
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """One ``u v`` line per edge; a leading ``n=N`` line records trailing isolated vertices."""
    top = max((v for _, v in g.edges), default=-1) + 1
    lines = [] if top == g.n else [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines)


def from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"edge list line {lineno}: bad vertex count {line!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"edge list line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"edge list line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"edge list line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise GraphValidationError(f"edge list declares n={n} but uses vertex {top - 1}")
    return Graph(n, edges)


def parse_graph(text: str, format: str = "graph6") -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format in ("edge-list", "edges"):
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return to_graph6(g)
    if format in ("edge-list", "edges"):
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph6_stream(lines) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


def read_corpus(path: str | os.PathLike) -> Iterator[Graph]:
    """Graphs from a graph6 file, or from every ``*.g6`` file of a directory (sorted by name)."""
    p = Path(path)
    files = sorted(p.glob("*.g6")) if p.is_dir() else [p]
    for f in files:
        with open(f, encoding="ascii") as fh:
            yield from read_graph6_stream(fh)
