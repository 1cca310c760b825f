"""Regularisation to an r-regular bipartite multigraph and its 1-factorization.

Any bipartite graph with maximum degree at most r embeds in an r-regular
bipartite multigraph; such a multigraph splits into r perfect matchings
(Hall's condition holds at every stage).  Restricting matching i to the real
edges and giving it color i yields a proper coloring in which every vertex of
degree r sees each of the colors 1..r exactly once.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidArgument
from .graph import BipartiteGraph, Edge


@dataclass(frozen=True)
class MultiEdge:
    x: int
    y: int
    id: int
    origin: Optional[Edge]  # the real edge of G, or None for a dummy

    @property
    def is_dummy(self) -> bool:
        return self.origin is None


@dataclass(frozen=True)
class BipartiteMultigraph:
    m: int
    n: int
    edges: tuple[MultiEdge, ...]
    real_m: int
    real_n: int

    def degree_x(self) -> list[int]:
        d = [0] * (self.m + 1)
        for e in self.edges:
            d[e.x] += 1
        return d[1:]

    def degree_y(self) -> list[int]:
        d = [0] * (self.n + 1)
        for e in self.edges:
            d[e.y] += 1
        return d[1:]

    def regular_degree(self) -> Optional[int]:
        degs = set(self.degree_x()) | set(self.degree_y())
        if len(degs) == 1 and self.m == self.n:
            return degs.pop()
        return None

    @property
    def dummy_count(self) -> int:
        return sum(e.is_dummy for e in self.edges)


@dataclass(frozen=True)
class OneFactorization:
    matchings: tuple[tuple[MultiEdge, ...], ...]

    def __len__(self):
        return len(self.matchings)


def regularize(G: BipartiteGraph, r: int) -> BipartiteMultigraph:
    """Pad G to an r-regular multigraph on max(m, n) + max(m, n) vertices.

    Real edges keep their ids 0..|E|-1 in canonical order; dummy edges are
    appended between the first deficient x and the first deficient y.
    """
    if r < G.max_degree:
        raise InvalidArgument(f"target degree {r} is below the maximum degree {G.max_degree}")
    size = max(G.m, G.n)
    edges = [MultiEdge(x, y, i, (x, y)) for i, (x, y) in enumerate(G.edges)]
    def_x = [0] + [r - d for d in G.degrees("X")] + [r] * (size - G.m)
    def_y = [0] + [r - d for d in G.degrees("Y")] + [r] * (size - G.n)
    i = j = 1
    while True:
        while i <= size and def_x[i] == 0:
            i += 1
        while j <= size and def_y[j] == 0:
            j += 1
        if i > size or j > size:
            break
        step = min(def_x[i], def_y[j])
        for _ in range(step):
            edges.append(MultiEdge(i, j, len(edges), None))
        def_x[i] -= step
        def_y[j] -= step
    # totals agree (r*size - |E| on both sides), so both run out together
    assert i > size and j > size
    return BipartiteMultigraph(size, size, tuple(edges), G.m, G.n)


def saturating_matching(left, adj) -> dict:
    """Matching that covers every vertex in ``left``.

    ``adj[x]`` lists edge objects with ``.x`` and ``.y``.  A greedy pass seeds
    the matching, then each uncovered x is joined by a BFS augmenting path.
    Raises InvalidArgument if Hall's condition fails for ``left``.
    """
    match_x: dict = {}
    match_y: dict = {}
    for x in left:
        for e in adj[x]:
            if e.y not in match_y:
                match_x[x] = match_y[e.y] = e
                break
    for root in left:
        if root in match_x:
            continue
        # alternating paths: x --free edge--> y --matched edge--> x'
        via: dict = {}
        queue = deque([root])
        seen_x = {root}
        end = None
        while queue and end is None:
            x = queue.popleft()
            for e in adj[x]:
                if e.y in via:
                    continue
                via[e.y] = e
                partner = match_y.get(e.y)
                if partner is None:
                    end = e.y
                    break
                if partner.x not in seen_x:
                    seen_x.add(partner.x)
                    queue.append(partner.x)
        if end is None:
            raise InvalidArgument(f"no matching covers x{root} together with the others")
        y = end
        while True:
            e = via[y]
            prev = match_x.get(e.x)
            match_x[e.x] = match_y[y] = e
            if prev is None:
                break
            y = prev.y
    return match_x


def one_factorization(M: BipartiteMultigraph) -> OneFactorization:
    r = M.regular_degree()
    if r is None:
        raise InvalidArgument("one_factorization needs a regular multigraph with equal parts")
    remaining = list(M.edges)
    matchings = []
    for _ in range(r):
        adj: list[list[MultiEdge]] = [[] for _ in range(M.m + 1)]
        for e in remaining:
            adj[e.x].append(e)
        matching = list(saturating_matching(range(1, M.m + 1), adj).values())
        matchings.append(tuple(sorted(matching, key=lambda e: e.id)))
        used = {e.id for e in matching}
        remaining = [e for e in remaining if e.id not in used]
    return OneFactorization(tuple(matchings))


def factorization_coloring(G: BipartiteGraph, r: int) -> dict:
    """Proper coloring of G with colors in [1, r] read off a 1-factorization."""
    F = one_factorization(regularize(G, r))
    colors = {}
    for c, matching in enumerate(F.matchings, 1):
        for e in matching:
            if e.origin is not None:
                colors[e.origin] = c
    return colors
