"""Orientations from colourings with no monochromatic edge and no rainbow 4-cycle.

Orienting every edge from the smaller colour to the larger one leaves no
4-cycle containing a directed path on all four of its vertices. In such an
orientation every directed LD set is also an undirected LD set.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import PreconditionError
from ..graph import Graph, Orientation, four_cycles


def _colour_list(g: Graph, coloring: Sequence[int] | Mapping[int, int]) -> list[int]:
    try:
        return [coloring[v] for v in range(g.n)]
    except (KeyError, IndexError):
        raise PreconditionError("colouring must assign a colour to every vertex") from None


def check_worm_coloring(g: Graph, coloring) -> None:
    """Raise PreconditionError naming the first monochromatic edge or rainbow 4-cycle."""
    col = _colour_list(g, coloring)
    for u, v in g.edges:
        if col[u] == col[v]:
            raise PreconditionError(f"edge {u}-{v} is monochromatic (colour {col[u]})")
    if len(set(col)) < 4:
        return
    for cyc in four_cycles(g):
        if len({col[v] for v in cyc}) == 4:
            raise PreconditionError(f"4-cycle {'-'.join(map(str, cyc))} is rainbow")


def check_no_directed_c4_path(g: Graph, d: Orientation) -> bool:
    """True iff no 4-cycle of ``g`` contains three consecutive arcs in the same rotational direction."""
    for cyc in four_cycles(g):
        forward = [d.has_arc(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
        for i in range(4):
            run = {forward[(i + j) % 4] for j in range(3)}
            if len(run) == 1:
                return False
    return True


def worm_orientation(g: Graph, coloring) -> Orientation:
    """Orient each edge from its lower-coloured end to its higher-coloured end."""
    check_worm_coloring(g, coloring)
    col = _colour_list(g, coloring)

    def tail(a: int, b: int) -> int:
        return a if col[a] < col[b] else b

    d = Orientation.from_rule(g, tail)
    assert check_no_directed_c4_path(g, d), "colour orientation has a directed path on a 4-cycle"
    return d
