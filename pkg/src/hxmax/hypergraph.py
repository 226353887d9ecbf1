"""Immutable r-uniform hypergraphs on dense integer vertex ids.

Edges are stored as strictly increasing vertex tuples, sorted
lexicographically, so two hypergraphs with the same edge set compare (and
serialize) identically.  Each edge also has a bitmask form used by the
connectivity code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import HypergraphError, ParseError

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[Edge, ...] = ()

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    def is_complete(self) -> bool:
        return self.m == comb(self.n, self.r)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def add_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return build(self.n, self.r, list(self.edges) + [tuple(e) for e in extra])

    def __str__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"


@dataclass(frozen=True)
class CutWitness:
    """A side X of an edge-cut, its crossing edges and d_H(X)."""

    side: tuple[int, ...]
    crossing: tuple[Edge, ...] = field(repr=False)

    @property
    def value(self) -> int:
        return len(self.crossing)

    def other_side(self, n: int) -> tuple[int, ...]:
        inside = set(self.side)
        return tuple(v for v in range(n) if v not in inside)


def build(n: int, r: int, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """Validate ``edges`` and return the canonical hypergraph.

    Raises HypergraphError naming the offending edge on wrong cardinality,
    out-of-range vertex ids or duplicates.
    """
    if n < 1:
        raise HypergraphError(f"vertex count must be >= 1, got {n}")
    if r < 2:
        raise HypergraphError(f"uniformity must be >= 2, got {r}")
    seen: set[Edge] = set()
    for raw in edges:
        verts = list(raw)
        e = tuple(sorted(set(verts)))
        if len(e) != r or len(verts) != r:
            raise HypergraphError(f"edge {tuple(verts)} does not have exactly {r} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise HypergraphError(f"edge {tuple(verts)} has a vertex outside 0..{n - 1}")
        if e in seen:
            raise HypergraphError(f"duplicate edge {e}")
        seen.add(e)
    return Hypergraph(n, r, tuple(sorted(seen)))


def complete(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, tuple(itertools.combinations(range(n), r)))


def empty(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, ())


def _as_mask(H: Hypergraph, X: Iterable[int]) -> int:
    mask = 0
    for v in X:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} not in 0..{H.n - 1}")
        mask |= 1 << v
    return mask


def mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def cut_value(H: Hypergraph, X: Iterable[int]) -> CutWitness:
    xm = _as_mask(H, X)
    full = (1 << H.n) - 1
    if xm == 0 or xm == full:
        raise HypergraphError("cut side must be a nonempty proper vertex subset")
    crossing = tuple(
        e for e, em in zip(H.edges, H.masks) if em & xm and em & ~xm
    )
    return CutWitness(mask_to_tuple(xm), crossing)


def cut_size_mask(masks: Sequence[int], xm: int) -> int:
    """d_H(X) for a side given as a bitmask (no validation)."""
    return sum(1 for em in masks if em & xm and em & ~xm)


def induced(H: Hypergraph, Y: Iterable[int], *, with_mapping: bool = False):
    """H[Y] relabelled to 0..|Y|-1 in increasing order of original id.

    With ``with_mapping=True`` returns ``(subhypergraph, mapping)`` where
    ``mapping[i]`` is the original id of new vertex i.
    """
    ym = _as_mask(H, Y)
    mapping = mask_to_tuple(ym)
    relabel = {v: i for i, v in enumerate(mapping)}
    edges = tuple(
        tuple(relabel[v] for v in e)
        for e, em in zip(H.edges, H.masks)
        if em & ym == em
    )
    # relabelling is monotone, so edge order stays lexicographic
    sub = Hypergraph(len(mapping), H.r, edges)
    return (sub, mapping) if with_mapping else sub


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    min_degree: int | None
    max_degree: int | None


def degrees(H: Hypergraph) -> DegreeSummary:
    deg = tuple(len(x) for x in H.incidence)
    if not deg:
        return DegreeSummary((), None, None)
    return DegreeSummary(deg, min(deg), max(deg))


def complement_edges(H: Hypergraph) -> Iterator[Edge]:
    """Absent r-subsets in lexicographic order."""
    present = H.edge_set
    for e in itertools.combinations(range(H.n), H.r):
        if e not in present:
            yield e


# -- canonical text format -------------------------------------------------


def dumps(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.r}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def loads(text: str) -> Hypergraph:
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline", line=text.count("\n") + 1)
    header = None
    edges: list[Edge] = []
    for lineno, line in enumerate(text.split("\n")[:-1], start=1):
        if line.startswith("#"):
            continue
        parts = line.split(" ")
        if header is None:
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError(f"malformed header {line!r}, expected '<n> <r>'", line=lineno)
            n, r = int(parts[0]), int(parts[1])
            if r < 2:
                raise ParseError(f"uniformity must be >= 2, got {r}", line=lineno)
            header = (n, r)
            continue
        n, r = header
        if not all(p.isdigit() for p in parts):
            raise ParseError(f"malformed edge line {line!r}", line=lineno)
        e = tuple(int(p) for p in parts)
        if len(e) != r:
            raise ParseError(f"edge has {len(e)} vertices, header says r={r}", line=lineno)
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ParseError("edge vertices must be strictly increasing", line=lineno)
        if e[-1] >= n:
            raise ParseError(f"vertex {e[-1]} out of range for n={n}", line=lineno)
        if edges and e <= edges[-1]:
            raise ParseError("edges must be unique and sorted lexicographically", line=lineno)
        edges.append(e)
    if header is None:
        raise ParseError("empty file, expected '<n> <r>' header", line=1)
    return Hypergraph(header[0], header[1], tuple(edges))


def read_file(path: str | Path) -> Hypergraph:
    return loads(Path(path).read_text())


def write_file(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(dumps(H))
