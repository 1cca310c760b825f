"""Bipartite graphs G(X, Y, E) with 1-based vertex indices on each part.

Vertices are addressed as ``("X", i)`` or ``("Y", j)``; edges as ``(i, j)``
meaning x_i y_j.  Edge tuples are always kept in canonical order: x-major,
then y ascending.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import GenerationFailed, InvalidArgument, ParseError

Edge = tuple[int, int]
Vertex = tuple[str, int]
SIDES = ("X", "Y")


def check_side(side: str) -> str:
    s = str(side).upper()
    if s not in SIDES:
        raise InvalidArgument(f"side must be X or Y, got {side!r}")
    return s


def other_side(side: str) -> str:
    return "Y" if check_side(side) == "X" else "X"


@dataclass(frozen=True)
class BipartiteGraph:
    m: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise InvalidArgument("part sizes must be non-negative")
        canon = tuple(sorted(set(self.edges)))
        if len(canon) != len(self.edges):
            raise InvalidArgument("duplicate edge in a simple graph")
        for x, y in canon:
            if not (1 <= x <= self.m and 1 <= y <= self.n):
                raise InvalidArgument(f"edge ({x}, {y}) out of range")
        object.__setattr__(self, "edges", canon)

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Iterable[Edge]) -> "BipartiteGraph":
        return cls(m, n, tuple((int(x), int(y)) for x, y in edges))

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def _adj(self) -> dict:
        nx = [[] for _ in range(self.m + 1)]
        ny = [[] for _ in range(self.n + 1)]
        for x, y in self.edges:
            nx[x].append(y)
            ny[y].append(x)
        return {"X": nx, "Y": ny}

    def part_size(self, side: str) -> int:
        return self.m if check_side(side) == "X" else self.n

    def vertices(self, side: str) -> list[Vertex]:
        s = check_side(side)
        return [(s, i) for i in range(1, self.part_size(s) + 1)]

    def _check_vertex(self, v: Vertex) -> tuple[str, int]:
        side, i = v
        side = check_side(side)
        if not 1 <= i <= self.part_size(side):
            raise InvalidArgument(f"vertex {side}{i} out of range")
        return side, i

    def neighbors(self, v: Vertex) -> list[int]:
        """Indices of the opposite-part neighbours of ``v``, ascending."""
        side, i = self._check_vertex(v)
        return list(self._adj[side][i])

    def incident_edges(self, v: Vertex) -> list[Edge]:
        side, i = self._check_vertex(v)
        if side == "X":
            return [(i, y) for y in self._adj["X"][i]]
        return [(x, i) for x in self._adj["Y"][i]]

    def degree(self, v: Vertex) -> int:
        side, i = self._check_vertex(v)
        return len(self._adj[side][i])

    def degrees(self, side: str) -> list[int]:
        s = check_side(side)
        return [len(a) for a in self._adj[s][1:]]

    @property
    def max_degree(self) -> int:
        return max(self.degrees("X") + self.degrees("Y"), default=0)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.n, self.m, tuple((y, x) for x, y in self.edges))

    def __str__(self):
        return f"BipartiteGraph(m={self.m}, n={self.n}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class BiregularSignature:
    """Parameters of Bip(m, l, n, k): |X| = m with X-degree l, |Y| = n with Y-degree k.

    ``transposed`` is set by :func:`classify_biregular` when the graph's own Y
    part is the larger one and therefore plays X.
    """

    m: int
    l: int
    n: int
    k: int
    transposed: bool = field(default=False, compare=False)

    def __post_init__(self):
        if min(self.m, self.l, self.n, self.k) < 1:
            raise InvalidArgument("signature entries must be positive")
        if self.m < self.n or self.m * self.l != self.n * self.k:
            raise InvalidArgument(
                f"Bip({self.m},{self.l},{self.n},{self.k}) needs m >= n and m*l == n*k"
            )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m, self.l, self.n, self.k)


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    if m < 1 or n < 1:
        raise InvalidArgument("complete_bipartite needs m >= 1 and n >= 1")
    return BipartiteGraph(m, n, tuple((x, y) for x in range(1, m + 1) for y in range(1, n + 1)))


def even_cycle(s: int) -> BipartiteGraph:
    """The cycle C_{2s}: x_i is joined to y_i and y_{i+1 mod s}."""
    if s < 2:
        raise InvalidArgument("even_cycle needs s >= 2")
    edges = set()
    for i in range(1, s + 1):
        edges.add((i, i))
        edges.add((i, i % s + 1))
    return BipartiteGraph(s, s, tuple(edges))


def random_biregular(sig: BiregularSignature, seed: int, max_retries: int = 1000) -> BipartiteGraph:
    """Seeded stub-matching generator for Bip(m, l, n, k).

    Duplicate edges left by the initial pairing are repaired with random
    2-edge swaps; the whole attempt is restarted on failure.
    """
    m, l, n, k = sig.as_tuple()
    if l > n or k > m:
        raise InvalidArgument(f"Bip({m},{l},{n},{k}) has no simple realisation (need l <= n, k <= m)")
    rng = random.Random(seed)
    x_stubs = [x for x in range(1, m + 1) for _ in range(l)]
    y_stubs = [y for y in range(1, n + 1) for _ in range(k)]
    for _ in range(max_retries):
        rng.shuffle(y_stubs)
        pairs = list(zip(x_stubs, y_stubs))
        if _repair_duplicates(pairs, rng, max_retries):
            return BipartiteGraph(m, n, tuple(pairs))
    raise GenerationFailed(f"could not realise Bip({m},{l},{n},{k}) after {max_retries} attempts")


def _repair_duplicates(pairs: list, rng: random.Random, budget: int) -> bool:
    counts: dict = {}
    for p in pairs:
        counts[p] = counts.get(p, 0) + 1
    for _ in range(budget * 10):
        dup = next((i for i, p in enumerate(pairs) if counts[p] > 1), None)
        if dup is None:
            return True
        j = rng.randrange(len(pairs))
        (x1, y1), (x2, y2) = pairs[dup], pairs[j]
        a, b = (x1, y2), (x2, y1)
        if x1 == x2 or y1 == y2 or counts.get(a, 0) or counts.get(b, 0):
            continue
        for old in (pairs[dup], pairs[j]):
            counts[old] -= 1
        pairs[dup], pairs[j] = a, b
        counts[a] = 1
        counts[b] = 1
    return False


def random_signature(rng: random.Random, max_m: int = 20, max_l: int = 5) -> BiregularSignature:
    """Draw a feasible signature with m <= max_m and l <= max_l by rejection."""
    while True:
        l = rng.randint(1, max_l)
        n = rng.randint(l, max_m)
        k = rng.randint(l, max_m)
        if (n * k) % l:
            continue
        m = n * k // l
        if n <= m <= max_m and k <= m:
            return BiregularSignature(m, l, n, k)


def random_x_uniform(m: int, n: int, r: int, seed: int, max_retries: int = 1000) -> BipartiteGraph:
    """Random graph with every X-degree r and every Y-degree at most r."""
    if r < 1 or r > n or m > n:
        raise InvalidArgument(f"need 1 <= r <= n and m <= n (got m={m}, n={n}, r={r})")
    rng = random.Random(seed)
    for _ in range(max_retries):
        room = [r] * (n + 1)
        edges = []
        for x in range(1, m + 1):
            free = [y for y in range(1, n + 1) if room[y] > 0]
            if len(free) < r:
                break
            # prefer the emptiest Y-vertices so later rows still fit
            rng.shuffle(free)
            free.sort(key=lambda y: -room[y])
            for y in free[:r]:
                room[y] -= 1
                edges.append((x, y))
        else:
            return BipartiteGraph(m, n, tuple(edges))
    raise GenerationFailed(f"could not build an X-uniform graph m={m} n={n} r={r}")


def degree_signature(G: BipartiteGraph) -> Optional[tuple[int, int, int, int]]:
    """(m, l, n, k) in the graph's own orientation, or None if not biregular."""
    dx, dy = set(G.degrees("X")), set(G.degrees("Y"))
    if len(dx) != 1 or len(dy) != 1 or 0 in dx or 0 in dy:
        return None
    return (G.m, dx.pop(), G.n, dy.pop())


def classify_biregular(G: BipartiteGraph) -> Optional[BiregularSignature]:
    own = degree_signature(G)
    if own is None:
        return None
    m, l, n, k = own
    if m >= n:
        return BiregularSignature(m, l, n, k)
    return BiregularSignature(n, k, m, l, transposed=True)


def require_biregular(G: BipartiteGraph) -> BiregularSignature:
    """Signature of G in its own orientation; G's X must be the larger part."""
    sig = classify_biregular(G)
    if sig is None:
        raise InvalidArgument(f"{G} is not biregular")
    if sig.transposed:
        raise InvalidArgument(f"{G} is biregular only with parts swapped (|X| < |Y|); transpose it first")
    return sig


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph with maps back to the parent's indices."""

    graph: BipartiteGraph
    x_map: tuple[int, ...]  # local x index - 1 -> parent x index
    y_map: tuple[int, ...]

    def lift_edge(self, e: Edge) -> Edge:
        return (self.x_map[e[0] - 1], self.y_map[e[1] - 1])


def induced_subgraph(G: BipartiteGraph, X0: Iterable[int], Y0: Iterable[int]) -> Subgraph:
    xs, ys = sorted(set(X0)), sorted(set(Y0))
    for i in xs:
        if not 1 <= i <= G.m:
            raise InvalidArgument(f"x{i} out of range")
    for j in ys:
        if not 1 <= j <= G.n:
            raise InvalidArgument(f"y{j} out of range")
    xi = {x: a for a, x in enumerate(xs, 1)}
    yi = {y: b for b, y in enumerate(ys, 1)}
    edges = tuple((xi[x], yi[y]) for x, y in G.edges if x in xi and y in yi)
    return Subgraph(BipartiteGraph(len(xs), len(ys), edges), tuple(xs), tuple(ys))


# -- text format ------------------------------------------------------------

def emit_graph(G: BipartiteGraph) -> str:
    lines = [f"bipartite {G.m} {G.n} {G.num_edges}"]
    lines += [f"e {x} {y}" for x, y in G.edges]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _ints(tokens, count, no, what):
    if len(tokens) != count:
        raise ParseError(f"expected {count} fields in {what} line", no)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer field in {what} line", no) from None


def parse_graph(text: str) -> BipartiteGraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "bipartite":
        raise ParseError("missing 'bipartite <m> <n> <edge_count>' header", lines[0][0] if lines else 1)
    no, toks = lines[0]
    m, n, count = _ints(toks[1:], 3, no, "header")
    if m < 0 or n < 0 or count < 0:
        raise ParseError("negative size in header", no)
    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"header announces {count} edges, found {len(body)}", body[-1][0] if body else no)
    seen = set()
    for no, toks in body:
        if toks[0] != "e":
            raise ParseError(f"unexpected record {toks[0]!r}", no)
        x, y = _ints(toks[1:], 2, no, "edge")
        if not 1 <= x <= m:
            raise ParseError(f"x index {x} out of range [1,{m}]", no)
        if not 1 <= y <= n:
            raise ParseError(f"y index {y} out of range [1,{n}]", no)
        if (x, y) in seen:
            raise ParseError(f"duplicate edge {x} {y}", no)
        seen.add((x, y))
    return BipartiteGraph(m, n, tuple(seen))
