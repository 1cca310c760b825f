"""Colorings that are interval on one part of a bipartite graph.

Every public function here returns a certified coloring: the result is run
through :func:`verify` and a failure raises :class:`ConstructionFailed`.
"""
from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass

from .coloring import EdgeColoring, verify
from .errors import ConstructionFailed, InvalidArgument, OutOfRange, PreconditionFailed
from .factorization import factorization_coloring, saturating_matching
from .graph import BipartiteGraph, Edge, Subgraph, check_side, induced_subgraph, require_biregular

_Arc = namedtuple("_Arc", "x y")


def _certify(G, phi, side, mode="interval"):
    report = verify(G, phi, side, mode)
    if not report.passed:
        raise ConstructionFailed(f"construction produced an invalid coloring:\n{report}")
    return phi


def persistent_interval_coloring(G: BipartiteGraph, side: str = "X") -> EdgeColoring:
    """Delta(G)-coloring whose spectrum at every vertex v of ``side`` is [1, d(v)].

    Requires max degree on the opposite part <= min degree on ``side``.  Colors
    Delta, Delta-1, ..., delta+1 are peeled off first, each as a matching that
    covers exactly the side vertices of degree >= c; the remainder is then
    delta-uniform on ``side`` and is colored by a 1-factorization.
    """
    side = check_side(side)
    if side == "Y":
        phi = persistent_interval_coloring(G.transpose(), "X")
        return _certify(G, EdgeColoring(phi.t, {(x, y): c for (y, x), c in phi.colors.items()}), "Y", "persistent")
    if G.num_edges == 0:
        raise InvalidArgument("cannot color a graph with no edges")
    dx, dy = G.degrees("X"), G.degrees("Y")
    low, top = min(dx), G.max_degree
    if max(dy) > low:
        raise PreconditionFailed(f"max Y-degree {max(dy)} exceeds min X-degree {low}")

    colors: dict = {}
    residual = set(G.edges)
    for c in range(top, low, -1):
        need = [x for x in range(1, G.m + 1) if dx[x - 1] >= c]
        adj = {x: [] for x in need}
        for x, y in sorted(residual):
            if x in adj:
                adj[x].append(_Arc(x, y))
        try:
            matching = saturating_matching(need, adj)
        except InvalidArgument as exc:
            raise ConstructionFailed(f"no matching for color {c}: {exc}") from None
        for arc in matching.values():
            colors[(arc.x, arc.y)] = c
            residual.discard((arc.x, arc.y))
    rest = BipartiteGraph(G.m, G.n, tuple(residual))
    colors.update(factorization_coloring(rest, low))
    return _certify(G, EdgeColoring(top, colors), "X", "persistent")


@dataclass(frozen=True)
class Block:
    index: int  # 1-based
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    sub: Subgraph


@dataclass(frozen=True)
class BlockPartition:
    width: int
    blocks: tuple[Block, ...]

    def __len__(self):
        return len(self.blocks)

    def block_of(self, e: Edge) -> int:
        """The unique block index whose subgraph holds edge e."""
        for b in self.blocks:
            if e[0] in b.xs:
                return b.index
        raise InvalidArgument(f"edge {e} lies in no block")


def _groups_partition(G: BipartiteGraph, side: str, groups) -> list[Block]:
    blocks = []
    for r, group in enumerate(groups, 1):
        group = tuple(group)
        others = sorted({w for v in group for w in G.neighbors((side, v))})
        if side == "X":
            sub = induced_subgraph(G, group, others)
            blocks.append(Block(r, group, tuple(others), sub))
        else:
            sub = induced_subgraph(G, others, group)
            blocks.append(Block(r, tuple(others), group, sub))
    return blocks


def block_partition(G: BipartiteGraph) -> BlockPartition:
    """Consecutive slices of X of size l, each with the union of its neighbourhoods."""
    sig = require_biregular(G)
    l = sig.l
    groups = [range(s, min(s + l, G.m + 1)) for s in range(1, G.m + 1, l)]
    return BlockPartition(l, tuple(_groups_partition(G, "X", groups)))


def _window_coloring(G: BipartiteGraph, side: str, blocks, width: int) -> dict:
    """Color block r persistently on ``side`` inside the window ((r-1)*width, r*width]."""
    colors = {}
    for b in blocks:
        local = persistent_interval_coloring(b.sub.graph, side)
        offset = (b.index - 1) * width
        for e, c in local.colors.items():
            colors[b.sub.lift_edge(e)] = offset + c
    return colors


def theorem3_coloring(G: BipartiteGraph) -> EdgeColoring:
    """Block coloring of G in Bip(m,l,n,k): interval on X with l*ceil(m/l) colors."""
    part = block_partition(G)
    t = part.width * len(part)
    colors = _window_coloring(G, "X", part.blocks, part.width)
    return _certify(G, EdgeColoring(t, colors), "X")


def theorem3_y_coloring(G: BipartiteGraph) -> EdgeColoring:
    """Proper k-coloring of G in Bip(m,l,n,k); every Y-spectrum is [1, k]."""
    require_biregular(G)
    phi = persistent_interval_coloring(G, "Y")
    return _certify(G, phi, "Y", "persistent")


def kmn_w(m: int, n: int, side: str) -> int:
    """Least t admitting a coloring of K_{m,n} interval on one whole part."""
    side = check_side(side)
    if m < 1 or n < 1:
        raise InvalidArgument("kmn_w needs m, n >= 1")
    size = m if side == "X" else n
    other = m + n - size
    return other * math.ceil(size / other)


def max_coloring(G: BipartiteGraph, side: str = "X") -> EdgeColoring:
    """|E|-coloring giving each vertex of ``side`` its own consecutive run of colors."""
    side = check_side(side)
    if G.num_edges == 0:
        raise InvalidArgument("cannot color a graph with no edges")
    colors = {}
    c = 0
    for v in G.vertices(side):
        for e in G.incident_edges(v):
            c += 1
            colors[e] = c
    return _certify(G, EdgeColoring(c, colors), side)


def range_bounds(G: BipartiteGraph, side: str) -> tuple[int, int]:
    """[l*ceil(m/l), m*l] for X and [k, n*k] for Y."""
    side = check_side(side)
    m, l, n, k = require_biregular(G).as_tuple()
    if side == "X":
        return l * math.ceil(m / l), m * l
    return k, n * k


def _balanced_groups(size: int, count: int) -> list[range]:
    q, extra = divmod(size, count)
    # larger groups last, so the top window holds at least two vertices when count < size
    sizes = [q] * (count - extra) + [q + 1] * extra
    groups, start = [], 1
    for s in sizes:
        groups.append(range(start, start + s))
        start += s
    return groups


def range_coloring(G: BipartiteGraph, side: str, t: int, budget=None) -> EdgeColoring:
    """A t-coloring of G in Bip(m,l,n,k) that is interval on ``side``.

    With d the degree on ``side``, write t = N*d + r.  The side is split into N
    consecutive groups, group j is colored persistently inside the window
    ((j-1)*d, j*d], and then one vertex of the top group has its lowest color
    moved to one past the current maximum, r times over.  Each move keeps that
    vertex's spectrum an interval, adds one fresh color, and leaves the
    vacated color in use by the group's other members.
    """
    side = check_side(side)
    m, l, n, k = require_biregular(G).as_tuple()
    lo, hi = range_bounds(G, side)
    if not lo <= t <= hi:
        raise OutOfRange(f"t={t} outside [{lo}, {hi}] for side {side}")
    if t == lo:
        return theorem3_coloring(G) if side == "X" else theorem3_y_coloring(G)
    if t == hi:
        return max_coloring(G, side)

    d, size = (l, m) if side == "X" else (k, n)
    count, r = divmod(t, d)
    groups = _balanced_groups(size, count)
    try:
        blocks = _groups_partition(G, side, groups)
        colors = _window_coloring(G, side, blocks, d)
        top = groups[-1]
        if r and len(top) < 2:
            raise ConstructionFailed("top group too small to stretch")
        mover = (side, top[0])
        base = (count - 1) * d + 1
        by_color = {colors[e]: e for e in G.incident_edges(mover)}
        for s in range(r):
            colors[by_color[base + s]] = base + s + d
        return _certify(G, EdgeColoring(t, colors), side)
    except (ConstructionFailed, PreconditionFailed) as exc:
        failure = exc
    from .solver import SearchBudget, feasible

    phi = feasible(G, side, t, budget or SearchBudget())
    if phi is None:
        raise ConstructionFailed(f"no coloring with t={t} found: {failure}")
    return _certify(G, phi, side)
