"""(0,1)-matrices: collected / b-regular / c-compressed predicates, the width
bound ceil(m/n)*n for collected n-regular n-compressed matrices, the peeling
step of its inductive proof, and an exhaustive census that checks the bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence

from .coloring import EdgeColoring, is_interval_set, spectrum
from .errors import BudgetExceeded, InvalidArgument, ParseError
from .graph import BipartiteGraph, _content_lines, _ints


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows or not rows[0]:
            raise InvalidArgument("matrix dimensions must be positive")
        if any(len(r) != len(rows[0]) for r in rows):
            raise InvalidArgument("ragged matrix")
        if any(v not in (0, 1) for r in rows for v in r):
            raise InvalidArgument("entries must be 0 or 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def mu(self) -> int:
        return len(self.rows)

    @property
    def nu(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j - 1] for r in self.rows)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def column_sums(self) -> list[int]:
        return [sum(c) for c in zip(*self.rows)]

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def _collected_line(line) -> bool:
    ones = [j for j, v in enumerate(line) if v]
    return bool(ones) and is_interval_set(ones)


def epsilon(H: BinaryMatrix, i: int) -> int:
    """Least column index holding a 1 in row i (both 1-based)."""
    if not 1 <= i <= H.mu:
        raise InvalidArgument(f"row {i} out of range")
    for j, v in enumerate(H.rows[i - 1], 1):
        if v:
            return j
    raise InvalidArgument(f"row {i} has no 1")


def is_collected(H: BinaryMatrix) -> bool:
    if not all(_collected_line(r) for r in H.rows):
        return False
    if not all(_collected_line(H.column(j)) for j in range(1, H.nu + 1)):
        return False
    if H[1, 1] != 1 or H[H.mu, H.nu] != 1:
        return False
    eps = [epsilon(H, i) for i in range(1, H.mu + 1)]
    return all(a <= b for a, b in zip(eps, eps[1:]))


def is_b_regular(H: BinaryMatrix, b: int) -> bool:
    return all(s == b for s in H.row_sums())


def is_c_compressed(H: BinaryMatrix, c: int) -> bool:
    return all(s <= c for s in H.column_sums())


def lemma1_bound(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise InvalidArgument("lemma1_bound needs m, n >= 1")
    return math.ceil(m / n) * n


def lemma_reduce(P: BinaryMatrix, n: int) -> BinaryMatrix:
    """Drop the first n rows and the first eps(n+1, P) - 1 columns of P."""
    if not (is_collected(P) and is_b_regular(P, n) and is_c_compressed(P, n)):
        raise InvalidArgument("lemma_reduce needs a collected n-regular n-compressed matrix")
    if math.ceil(P.mu / n) < 2:
        raise InvalidArgument("lemma_reduce needs more than n rows")
    cut = epsilon(P, n + 1)
    if cut < n + 1:
        raise AssertionError(f"eps(n+1, P) = {cut} < n+1 contradicts n-compression")
    return BinaryMatrix(tuple(r[cut - 1:] for r in P.rows[n:]))


def matrix_from_coloring(G: BipartiteGraph, phi: EdgeColoring) -> BinaryMatrix:
    """Spectrum indicator rows of the X-vertices, sorted stably by spectrum minimum."""
    specs = []
    for v in G.vertices("X"):
        s = spectrum(G, phi, v)
        if not is_interval_set(s):
            raise InvalidArgument(f"coloring is not interval at x{v[1]}")
        specs.append(s)
    specs.sort(key=lambda s: s[0])
    return BinaryMatrix(tuple(tuple(int(j in s) for j in range(1, phi.t + 1)) for s in specs))


def _staircase(starts, n: int, w: int) -> BinaryMatrix:
    return BinaryMatrix(tuple(tuple(int(s <= j < s + n) for j in range(1, w + 1)) for s in starts))


def census_instances(m: int, n: int, w: int, max_candidates: int = 200_000) -> Iterator[BinaryMatrix]:
    """Every collected n-regular n-compressed m x w matrix.

    Rows of such a matrix are runs of n ones with nondecreasing starts, so the
    candidates are the nondecreasing start sequences in [1, w-n+1]; each one
    is still checked against the three predicates.
    """
    if m < 1 or n < 1:
        raise InvalidArgument("census needs m, n >= 1")
    if w < n:
        return
    slots = w - n + 1
    if math.comb(slots + m - 1, m) > max_candidates:
        raise BudgetExceeded(f"census of m={m}, n={n}, w={w} exceeds {max_candidates} candidates",
                             stats={"slots": slots, "rows": m})
    for starts in combinations_with_replacement(range(1, slots + 1), m):
        if starts[0] != 1 or starts[-1] != slots:
            continue
        cover = [0] * (w + 2)
        for s in starts:
            cover[s] += 1
            cover[s + n] -= 1
        running, ok = 0, True
        for j in range(1, w + 1):
            running += cover[j]
            if running > n:
                ok = False
                break
        if not ok:
            continue
        H = _staircase(starts, n, w)
        if is_collected(H) and is_b_regular(H, n) and is_c_compressed(H, n):
            yield H


def census_min_width(m: int, n: int, w_max: int, max_candidates: int = 200_000) -> Optional[int]:
    """Smallest w <= w_max with a collected n-regular n-compressed m x w matrix, else None."""
    for w in range(1, w_max + 1):
        for _ in census_instances(m, n, w, max_candidates):
            return w
    return None


# -- text format ------------------------------------------------------------

def emit_matrix(H: BinaryMatrix) -> str:
    return f"matrix {H.mu} {H.nu}\n{H}\n"


def parse_matrix(text: str) -> BinaryMatrix:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "matrix":
        raise ParseError("missing 'matrix <rows> <cols>' header", lines[0][0] if lines else 1)
    no, toks = lines[0]
    mu, nu = _ints(toks[1:], 2, no, "header")
    if mu < 1 or nu < 1:
        raise ParseError("matrix dimensions must be positive", no)
    body = lines[1:]
    if len(body) != mu:
        raise ParseError(f"header announces {mu} rows, found {len(body)}", body[-1][0] if body else no)
    rows = []
    for no, toks in body:
        row = _ints(toks, nu, no, "matrix row")
        if any(v not in (0, 1) for v in row):
            raise ParseError("entries must be 0 or 1", no)
        rows.append(tuple(row))
    return BinaryMatrix(tuple(rows))
