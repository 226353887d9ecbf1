"""Edge-non-decreasing rewriting of star-like satellite spectra.

A spectrum records how many satellites of each size (1, or r..l-1) hang off
a complete K_{l-1} nucleus.  Four operations rewrite it without losing
edges:

Split(i)       one K_i satellite (r <= i <= s) becomes i single vertices
Group1(i, j)   a vertex moves from a K_i to a K_j satellite, s < i <= j < l-1
Group2(i0)     a single-vertex satellite joins the K_{i0} satellite
Group3         single-vertex satellites are packed into K_{l-1} blocks
               (plus one K_q1 block when the remainder q1 exceeds s)

Repeated to a fixpoint they reach the spectrum of the canonical maximal
star-like hypergraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .bounds import s_param, t_param
from .constructions import StarLikeSpec, msh_satellites
from .errors import ParameterError


@dataclass(frozen=True)
class SatelliteSpectrum:
    k: int
    r: int
    l: int
    counts: tuple[tuple[int, int], ...]  # sorted (size, multiplicity), zero entries dropped

    @classmethod
    def of(cls, k: int, r: int, l: int, counts: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = dict(counts)
        t = t_param(k, r)
        if l < t + 1:
            raise ParameterError("l >= t(k,r)+1", f"l={l}, t={t}")
        for size, c in items.items():
            if size != 1 and not r <= size <= l - 1:
                raise ParameterError("satellite size in {1} or [r, l-1]", f"size {size}")
            if c < 0:
                raise ParameterError("satellite counts >= 0", f"S_{size}={c}")
        return cls(k, r, l, tuple(sorted((i, c) for i, c in items.items() if c)))

    @classmethod
    def from_sizes(cls, k: int, r: int, l: int, sizes: Iterable[int]):
        counts: dict[int, int] = {}
        for i in sizes:
            counts[i] = counts.get(i, 0) + 1
        return cls.of(k, r, l, counts)

    def __getitem__(self, size: int) -> int:
        return dict(self.counts).get(size, 0)

    @property
    def n(self) -> int:
        return self.l - 1 + sum(i * c for i, c in self.counts)

    def sizes(self) -> tuple[int, ...]:
        """Satellite sizes, largest first (the layout used when materialising)."""
        return tuple(i for i, c in reversed(self.counts) for _ in range(c))

    def to_spec(self) -> StarLikeSpec:
        return StarLikeSpec(self.k, self.r, self.l, self.sizes())

    def _with(self, changes: Mapping[int, int]) -> "SatelliteSpectrum":
        d = dict(self.counts)
        for i, delta in changes.items():
            d[i] = d.get(i, 0) + delta
        return SatelliteSpectrum(self.k, self.r, self.l, tuple(sorted((i, c) for i, c in d.items() if c)))

    def __str__(self) -> str:
        body = ", ".join(f"S_{i}={c}" for i, c in self.counts) or "empty"
        return f"[{body}]"


def spectrum_edges(sp: SatelliteSpectrum) -> int:
    k, r = sp.k, sp.r
    total = comb(sp.l - 1, r)
    for i, c in sp.counts:
        total += c * (k + comb(i, r))
    return total


def msh_spectrum(n: int, k: int, l: int, r: int) -> SatelliteSpectrum:
    if n == l - 1:
        return SatelliteSpectrum.of(k, r, l, {})
    return SatelliteSpectrum.from_sizes(k, r, l, msh_satellites(n, k, l, r))


@dataclass(frozen=True)
class Op:
    name: str
    i: int | None = None
    j: int | None = None

    def __str__(self) -> str:
        args = [str(x) for x in (self.i, self.j) if x is not None]
        return f"{self.name}({','.join(args)})" if args else self.name


def Split(i: int) -> Op:
    return Op("Split", i)


def Group1(i: int, j: int) -> Op:
    return Op("Group1", i, j)


def Group2(i0: int) -> Op:
    return Op("Group2", i0)


GROUP3 = Op("Group3")


def _reject(op: Op, sp: SatelliteSpectrum, why: str):
    raise ParameterError(f"{op} precondition: {why}", f"spectrum {sp}")


def apply_op(sp: SatelliteSpectrum, op: Op) -> tuple[SatelliteSpectrum, int]:
    """Apply one operation; returns the new spectrum and its edge delta."""
    k, r, l = sp.k, sp.r, sp.l
    s = s_param(k, r)
    if op.name == "Split":
        i = op.i
        if not r <= i <= s:
            _reject(op, sp, f"r <= i <= s={s}")
        if sp[i] < 1:
            _reject(op, sp, f"S_{i} >= 1")
        return sp._with({i: -1, 1: i}), i * k - (k + comb(i, r))
    if op.name == "Group1":
        i, j = op.i, op.j
        if not s < i <= j < l - 1:
            _reject(op, sp, f"s={s} < i <= j < l-1={l - 1}")
        if (i == j and sp[i] < 2) or sp[i] < 1 or sp[j] < 1:
            _reject(op, sp, "two satellites of sizes i and j")
        out = sp._with({i: -1, i - 1: 1}) if i != j else sp._with({i: -2, i - 1: 1})
        out = out._with({j + 1: 1}) if i == j else out._with({j: -1, j + 1: 1})
        return out, comb(j, r - 1) - comb(i - 1, r - 1)
    if op.name == "Group2":
        i0 = op.i
        if not s < i0 < l - 1:
            _reject(op, sp, f"s={s} < i0 < l-1={l - 1}")
        if sp[1] < 1 or sp[i0] < 1:
            _reject(op, sp, f"S_1 >= 1 and S_{i0} >= 1")
        return sp._with({1: -1, i0: -1, i0 + 1: 1}), comb(i0, r - 1) - k
    if op.name == "Group3":
        S1 = sp[1]
        if l - 1 <= s:
            _reject(op, sp, f"l-1 > s={s}")
        if S1 <= s:
            _reject(op, sp, f"S_1 > s={s}")
        p1, q1 = divmod(S1, l - 1)
        changes = {1: -S1, l - 1: p1}
        gained = p1 * (k + comb(l - 1, r))
        if q1 <= s:
            changes[1] += q1
            gained += q1 * k
        else:
            changes[q1] = changes.get(q1, 0) + 1
            gained += k + comb(q1, r)
        return sp._with(changes), gained - S1 * k
    raise ParameterError("known operation", op.name)


def enabled_ops(sp: SatelliteSpectrum) -> list[Op]:
    """Every applicable operation, in priority order."""
    k, r, l = sp.k, sp.r, sp.l
    s = s_param(k, r)
    ops = [Split(i) for i, c in sp.counts if r <= i <= s]
    mids = [i for i, c in sp.counts if s < i < l - 1]
    for x in mids:
        for y in reversed(mids):
            if x < y or (x == y and sp[x] >= 2):
                ops.append(Group1(x, y))
    if sp[1] >= 1:
        ops.extend(Group2(i0) for i0 in mids)
    if l - 1 > s and sp[1] > s:
        ops.append(GROUP3)
    return ops


@dataclass(frozen=True)
class TraceStep:
    op: Op
    delta: int
    edges: int
    spectrum: SatelliteSpectrum

    def to_dict(self) -> dict:
        return {"op": str(self.op), "delta": self.delta, "edges": self.edges,
                "spectrum": {str(i): c for i, c in self.spectrum.counts}}


def normalize(
    sp: SatelliteSpectrum, rng: random.Random | None = None, max_steps: int = 100_000
) -> tuple[SatelliteSpectrum, list[TraceStep]]:
    """Rewrite to a fixpoint.

    Default priority: Split, then Group1 (smallest i, largest j), Group2,
    Group3.  With ``rng`` a random enabled operation is taken instead, which
    is how order independence is exercised.
    """
    trace: list[TraceStep] = []
    edges = spectrum_edges(sp)
    for _ in range(max_steps):
        ops = enabled_ops(sp)
        if not ops:
            return sp, trace
        op = rng.choice(ops) if rng is not None else ops[0]
        sp, delta = apply_op(sp, op)
        edges += delta
        trace.append(TraceStep(op, delta, edges, sp))
    raise RuntimeError(f"no fixpoint after {max_steps} steps")
