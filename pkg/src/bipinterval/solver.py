"""Exhaustive search for colorings interval on one part, and w_R by upward scan.

Edges are colored one at a time in side-major order (all edges of the first
side vertex, then the second, ...), trying colors in ascending order, so the
first witness found is the lexicographically least one in that order.
Pruning:

* a color already present at either endpoint is skipped;
* the colors at a side vertex must span at most its degree;
* the edges still to be colored must be able to cover every unused color.

An "infeasible" answer is only returned after the search space is exhausted;
hitting the budget raises :class:`BudgetExceeded` instead.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import EdgeColoring, verify
from .errors import BudgetExceeded, InvalidArgument
from .graph import BipartiteGraph, check_side


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 20_000_000
    max_t: int = 10_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_t <= 0 or self.time_limit <= 0:
            raise InvalidArgument("budget entries must be positive")


class _Search:
    def __init__(self, G: BipartiteGraph, side: str, t: int, budget: SearchBudget, break_reversal: bool):
        self.G, self.side, self.t, self.budget = G, side, t, budget
        if side == "X":
            self.order = list(G.edges)
            self.key = [(x, y) for x, y in self.order]
        else:
            self.order = sorted(G.edges, key=lambda e: (e[1], e[0]))
            self.key = [(y, x) for x, y in self.order]  # (side vertex, other vertex)
        self.deg = [0] * (G.part_size(side) + 1)
        for v, _ in self.key:
            self.deg[v] += 1
        self.break_reversal = break_reversal
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"node budget {self.budget.max_nodes} exhausted at t={self.t}",
                                 stats={"nodes": self.nodes, "t": self.t})
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit {self.budget.time_limit}s exceeded at t={self.t}",
                                 stats={"nodes": self.nodes, "t": self.t})

    def run(self, root_colors: Optional[Iterable[int]] = None) -> Optional[dict]:
        t, E = self.t, len(self.order)
        if E == 0 or t < 1 or t > E:
            return None
        side_mask = [0] * (len(self.deg))
        other_mask = [0] * (self.G.part_size("Y" if self.side == "X" else "X") + 1)
        lo = [0] * len(self.deg)
        hi = [0] * len(self.deg)
        count = [0] * (t + 1)
        state = {"missing": t}
        assign = [0] * E
        key = self.key
        first_choices = list(root_colors) if root_colors is not None else list(range(1, t + 1))
        if self.break_reversal:
            # c -> t+1-c preserves every property searched for
            first_choices = [c for c in first_choices if c <= (t + 1) // 2]

        def place(i: int) -> bool:
            if i == E:
                return state["missing"] == 0
            v, w = key[i]
            choices = first_choices if i == 0 else range(1, t + 1)
            busy = side_mask[v] | other_mask[w]
            fresh_v = side_mask[v] == 0
            for c in choices:
                bit = 1 << c
                if busy & bit:
                    continue
                if fresh_v:
                    nlo = nhi = c
                else:
                    nlo, nhi = min(lo[v], c), max(hi[v], c)
                    if nhi - nlo + 1 > self.deg[v]:
                        continue
                missing = state["missing"] - (count[c] == 0)
                if missing > E - i - 1:
                    continue
                self._tick()
                olo, ohi = lo[v], hi[v]
                side_mask[v] |= bit
                other_mask[w] |= bit
                lo[v], hi[v] = nlo, nhi
                count[c] += 1
                state["missing"] = missing
                assign[i] = c
                if place(i + 1):
                    return True
                count[c] -= 1
                state["missing"] = missing + (count[c] == 0)
                side_mask[v] &= ~bit
                other_mask[w] &= ~bit
                lo[v], hi[v] = olo, ohi
            return False

        if place(0):
            return dict(zip(self.order, assign))
        return None


def _run_branch(args):
    G, side, t, budget, root = args
    search = _Search(G, side, t, budget, False)
    try:
        return ("ok", search.run([root]), search.nodes)
    except BudgetExceeded as exc:
        return ("budget", str(exc), exc.stats)


def feasible(G: BipartiteGraph, side: str, t: int, budget: Optional[SearchBudget] = None,
             break_symmetry: bool = False, jobs: int = 1) -> Optional[EdgeColoring]:
    """A proper, surjective t-coloring interval on ``side``, or None if none exists."""
    side = check_side(side)
    budget = budget or SearchBudget()
    if G.num_edges == 0:
        raise InvalidArgument("cannot color a graph with no edges")
    if jobs > 1 and 1 <= t <= G.num_edges and not break_symmetry:
        colors = _feasible_parallel(G, side, t, budget, jobs)
    else:
        colors = _Search(G, side, t, budget, break_symmetry).run()
    if colors is None:
        return None
    phi = EdgeColoring(t, colors)
    report = verify(G, phi, side)
    assert report.passed, f"solver produced an invalid witness:\n{report}"
    return phi


def _feasible_parallel(G, side, t, budget, jobs):
    # one branch per color of the first edge; the least feasible root color
    # gives the same witness as the sequential search
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_run_branch, [(G, side, t, budget, c) for c in range(1, t + 1)]))
    for status, payload, stats in results:
        if status == "budget":
            raise BudgetExceeded(payload, stats=stats)
        if payload is not None:
            return payload
    return None


def exact_w(G: BipartiteGraph, side: str, budget: Optional[SearchBudget] = None,
            break_symmetry: bool = False, jobs: int = 1) -> tuple[int, EdgeColoring]:
    """Least t with a t-coloring interval on ``side``, with a witness."""
    side = check_side(side)
    budget = budget or SearchBudget()
    if G.num_edges == 0:
        raise InvalidArgument("cannot color a graph with no edges")
    lower = max(G.max_degree, 1)
    top = G.num_edges
    for t in range(lower, top + 1):
        if t > budget.max_t:
            raise BudgetExceeded(f"w_R exceeds max_t={budget.max_t}", bracket=(t, top))
        try:
            phi = feasible(G, side, t, budget, break_symmetry, jobs)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), stats=exc.stats, bracket=(t, top)) from None
        if phi is not None:
            return t, phi
    raise AssertionError("no coloring interval on a whole part up to |E| colors; max_coloring says otherwise")


def feasibility_profile(G: BipartiteGraph, side: str, t_range: Iterable[int],
                        budget: Optional[SearchBudget] = None, jobs: int = 1) -> list[tuple[int, Optional[bool]]]:
    """Per-t verdicts: True feasible, False infeasible, None when the budget ran out."""
    out = []
    for t in t_range:
        try:
            out.append((t, feasible(G, side, t, budget, jobs=jobs) is not None))
        except BudgetExceeded:
            out.append((t, None))
    return out
