"""Edge colorings, spectra, and the interval predicates on one part.

Colors are 1-based.  An :class:`EdgeColoring` is a total map over the edges
of a specific graph; it is only *certified* once :func:`verify` passes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import InvalidArgument, ParseError
from .graph import BipartiteGraph, Edge, Vertex, _content_lines, _ints, check_side


@dataclass(frozen=True, eq=True)
class EdgeColoring:
    t: int
    colors: Mapping[Edge, int] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "colors", dict(sorted(self.colors.items())))
        if self.t < 0:
            raise InvalidArgument("t must be non-negative")
        for e, c in self.colors.items():
            if not 1 <= c <= self.t:
                raise InvalidArgument(f"color {c} on edge {e} outside [1,{self.t}]")

    def __getitem__(self, e: Edge) -> int:
        return self.colors[e]

    def used_colors(self) -> set:
        return set(self.colors.values())

    def shifted(self, offset: int, t: int) -> "EdgeColoring":
        return EdgeColoring(t, {e: c + offset for e, c in self.colors.items()})


def coloring_for(G: BipartiteGraph, colors: Mapping[Edge, int], t: Optional[int] = None) -> EdgeColoring:
    """Build a coloring of G, insisting the assignment is total on E(G)."""
    missing = [e for e in G.edges if e not in colors]
    if missing:
        raise InvalidArgument(f"edge {missing[0]} has no color")
    extra = [e for e in colors if e not in G.edge_set]
    if extra:
        raise InvalidArgument(f"edge {extra[0]} is not in the graph")
    if t is None:
        t = max(colors.values(), default=0)
    return EdgeColoring(t, colors)


def spectrum(G: BipartiteGraph, phi: EdgeColoring, v: Vertex) -> list[int]:
    return sorted({phi[e] for e in G.incident_edges(v)})


def is_interval_set(colors: Iterable[int]) -> bool:
    s = set(colors)
    return bool(s) and max(s) - min(s) + 1 == len(s)


def is_interval_at(G: BipartiteGraph, phi: EdgeColoring, v: Vertex) -> bool:
    return is_interval_set(spectrum(G, phi, v))


def is_interval_on(G: BipartiteGraph, phi: EdgeColoring, R: Iterable[Vertex]) -> bool:
    return all(is_interval_at(G, phi, v) for v in R)


def is_persistent_interval_at(G: BipartiteGraph, phi: EdgeColoring, v: Vertex) -> bool:
    return spectrum(G, phi, v) == list(range(1, G.degree(v) + 1))


@dataclass
class Check:
    name: str
    ok: bool
    witness: object = None

    def __str__(self):
        mark = "ok  " if self.ok else "FAIL"
        return f"[{mark}] {self.name}" + ("" if self.witness is None else f": {self.witness}")


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _fmt_edge(e: Edge) -> str:
    return f"x{e[0]}y{e[1]}"


def is_proper(G: BipartiteGraph, phi: EdgeColoring) -> VerificationReport:
    """Properness and surjectivity onto [1, t]; each failure carries a witness."""
    report = VerificationReport()
    total = all(e in phi.colors for e in G.edges) and len(phi.colors) == G.num_edges
    report.checks.append(Check("total", total, None if total else "assignment does not match E(G)"))

    clashes = []
    for side in ("X", "Y"):
        for v in G.vertices(side):
            first: dict = {}
            for e in G.incident_edges(v):
                c = phi.colors.get(e)
                if c is None:
                    continue
                if c in first:
                    clashes.append((first[c], e, c))
                else:
                    first[c] = e
    if clashes:
        for a, b, c in clashes:
            report.checks.append(Check("proper", False, f"{_fmt_edge(a)} and {_fmt_edge(b)} share color {c}"))
    else:
        report.checks.append(Check("proper", True))

    used = phi.used_colors()
    missing = [c for c in range(1, phi.t + 1) if c not in used]
    if missing:
        report.checks.append(Check("surjective", False, f"color {missing[0]} unused"))
    else:
        report.checks.append(Check("surjective", phi.t >= 1 or G.num_edges == 0))
    return report


def verify(G: BipartiteGraph, phi: EdgeColoring, side: str = "X", mode: str = "interval") -> VerificationReport:
    """Properness, surjectivity and the per-vertex interval (or persistent) test on one part."""
    side = check_side(side)
    if mode not in ("interval", "persistent"):
        raise InvalidArgument(f"mode must be 'interval' or 'persistent', got {mode!r}")
    report = is_proper(G, phi)
    if not report.checks[0].ok:
        return report
    bad_interval = []
    bad_persistent = []
    for v in G.vertices(side):
        if G.degree(v) == 0:
            continue
        spec = spectrum(G, phi, v)
        if not is_interval_set(spec):
            bad_interval.append((v, spec))
        if mode == "persistent" and spec != list(range(1, G.degree(v) + 1)):
            bad_persistent.append((v, spec))
    for v, spec in bad_interval:
        report.checks.append(Check(f"interval on {side}", False, f"{v[0]}{v[1]} has spectrum {spec}"))
    if not bad_interval:
        report.checks.append(Check(f"interval on {side}", True))
    if mode == "persistent":
        for v, spec in bad_persistent:
            report.checks.append(Check(f"persistent on {side}", False, f"{v[0]}{v[1]} has spectrum {spec}"))
        if not bad_persistent:
            report.checks.append(Check(f"persistent on {side}", True))
    return report


def chromatic_index_biregular(G: BipartiteGraph, witness: bool = False):
    """chi'(G) = k for G in Bip(m, l, n, k); optionally with a proper k-coloring."""
    from .graph import require_biregular

    sig = require_biregular(G)
    if not witness:
        return sig.k
    from .constructions import theorem3_y_coloring

    return sig.k, theorem3_y_coloring(G)


# -- text format ------------------------------------------------------------

def emit_coloring(phi: EdgeColoring) -> str:
    lines = [f"coloring {phi.t}"]
    lines += [f"c {x} {y} {c}" for (x, y), c in sorted(phi.colors.items())]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, G: BipartiteGraph) -> EdgeColoring:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "coloring":
        raise ParseError("missing 'coloring <t>' header", lines[0][0] if lines else 1)
    no, toks = lines[0]
    (t,) = _ints(toks[1:], 1, no, "header")
    colors: dict = {}
    for no, toks in lines[1:]:
        if toks[0] != "c":
            raise ParseError(f"unexpected record {toks[0]!r}", no)
        x, y, c = _ints(toks[1:], 3, no, "color")
        if (x, y) not in G.edge_set:
            raise ParseError(f"edge {x} {y} is not in the graph", no)
        if (x, y) in colors:
            raise ParseError(f"duplicate color line for edge {x} {y}", no)
        if not 1 <= c <= t:
            raise ParseError(f"color {c} outside [1,{t}]", no)
        colors[(x, y)] = c
    missing = [e for e in G.edges if e not in colors]
    if missing:
        raise ParseError(f"no color line for edge {missing[0][0]} {missing[0][1]}", lines[-1][0])
    return EdgeColoring(t, colors)
