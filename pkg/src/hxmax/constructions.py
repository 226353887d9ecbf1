"""Deterministic builders for the extremal families.

Vertex layout is always: nucleus block first, then satellites in the order
given.  Attachment edges follow fixed canonical schemes so that output files
are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .bounds import BoundQuery, t_param
from .errors import ParameterError
from .hypergraph import Hypergraph, build


@dataclass(frozen=True)
class StarLikeSpec:
    k: int
    r: int
    l: int
    satellites: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "satellites", tuple(self.satellites))
        if self.k < 2 or self.r < 2:
            raise ParameterError("k, r >= 2", f"k={self.k}, r={self.r}")
        t = t_param(self.k, self.r)
        if self.l < t + 1:
            raise ParameterError("l >= t(k,r)+1", f"l={self.l}, t={t}")
        for i in self.satellites:
            if i != 1 and not self.r <= i <= self.l - 1:
                raise ParameterError(
                    "satellite size in {1} or [r, l-1]", f"size {i} with r={self.r}, l={self.l}"
                )

    @property
    def n(self) -> int:
        return self.l - 1 + sum(self.satellites)


def _star(nucleus: int, satellites, k: int, r: int) -> Hypergraph:
    """Complete nucleus on ``nucleus`` vertices plus complete satellites, each
    joined by k edges: edge j uses satellite vertex j mod i and the j-th
    (r-1)-subset of the nucleus in lexicographic order."""
    if comb(nucleus, r - 1) <= k:
        raise ParameterError("C(nucleus, r-1) > k", f"nucleus={nucleus}, r={r}, k={k}")
    hooks = list(itertools.islice(itertools.combinations(range(nucleus), r - 1), k))
    edges = list(itertools.combinations(range(nucleus), r))
    start = nucleus
    for i in satellites:
        if 2 <= i < r:
            raise ParameterError("satellite size not in {2..r-1}", f"size {i}, r={r}")
        block = range(start, start + i)
        edges.extend(itertools.combinations(block, r))
        for j, hook in enumerate(hooks):
            edges.append(hook + (start + j % i,))
        start += i
    return build(start, r, edges)


def build_starlike(spec: StarLikeSpec) -> Hypergraph:
    return _star(spec.l - 1, spec.satellites, spec.k, spec.r)


def msh_satellites(n: int, k: int, l: int, r: int) -> tuple[int, ...]:
    """Satellite sizes of the canonical maximal star-like hypergraph."""
    q = BoundQuery(n, k, l, r)
    s = q.s
    if l - 1 <= s:
        return (1,) * (n - l + 1)
    sats = (l - 1,) * (q.p - 1)
    if q.q > s:
        return sats + (q.q,)
    return sats + (1,) * q.q


def build_msh(n: int, k: int, l: int, r: int) -> Hypergraph:
    sats = msh_satellites(n, k, l, r)
    return build_starlike(StarLikeSpec(k, r, l, sats))


@dataclass(frozen=True)
class Def5Layout:
    """Vertex blocks of a two-clique witness (for structural checks)."""

    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    satellites: tuple[tuple[int, ...], ...]
    k: int


def _def5_check(t: int, r: int, p: int, l: int) -> int:
    if not t > r > 2:
        raise ParameterError("t > r > 2", f"t={t}, r={r}")
    k = comb(t - 1, r - 1)
    if k * r < 2 * t:
        raise ParameterError("k*r >= 2t", f"k={k}, r={r}, t={t}")
    if l < 2 * t + 2:
        raise ParameterError("l >= 2t+2", f"l={l}, t={t}")
    if p < 0:
        raise ParameterError("p >= 0", f"p={p}")
    return k


def _first_unused(pool, size: int, fixed: tuple[int, ...], used: set) -> tuple[int, ...]:
    for extra in itertools.combinations(pool, size):
        e = tuple(sorted(fixed + extra))
        if e not in used:
            return e
    raise ParameterError("distinct attachment edges exist", f"fixed={fixed}")


def def5_layout(t: int, r: int, p: int, l: int) -> Def5Layout:
    k = _def5_check(t, r, p, l)
    a, b = (l + 1) // 2, l // 2
    A = tuple(range(a))
    B = tuple(range(a, a + b))
    sats = tuple(tuple(range(l + i * t, l + (i + 1) * t)) for i in range(p))
    return Def5Layout(A, B, sats, k)


def build_def5(t: int, r: int, p: int, l: int) -> Hypergraph:
    """Two complete halves K_a, K_b joined by k edges, plus p K_t satellites.

    k = C(t-1, r-1).  Joining edge j takes A[j mod a], B[j mod b] and the
    first r-2 further K_a vertices that keep it distinct.  Satellite vertices
    are dealt round-robin into k groups (size <= ceil(t/k) <= r-1, or one
    vertex per edge when k > t); edge j is group j plus nucleus vertices from
    K_a for even j and K_b for odd j, so every satellite vertex is covered
    and both halves are touched.
    """
    lay = def5_layout(t, r, p, l)
    k, A, B = lay.k, lay.a_side, lay.b_side
    edges = list(itertools.combinations(A, r)) + list(itertools.combinations(B, r))
    used: set = set()
    for j in range(k):
        u, w = A[j % len(A)], B[j % len(B)]
        pool = [x for x in A if x != u]
        e = _first_unused(pool, r - 2, (u, w), used)
        used.add(e)
        edges.append(e)
    for sat in lay.satellites:
        edges.extend(itertools.combinations(sat, r))
        if k <= t:
            groups = [tuple(sat[i] for i in range(j, t, k)) for j in range(k)]
        else:
            groups = [(sat[j % t],) for j in range(k)]
        for j, g in enumerate(groups):
            side = A if j % 2 == 0 else B
            e = _first_unused(side, r - len(g), g, used)
            used.add(e)
            edges.append(e)
    return build(l + p * t, r, edges)


def build_lemma41(n: int, a: int, k: int, r: int, variant: str) -> Hypergraph:
    """Star-like witnesses built from K_t blocks.

    Variant "i": nucleus K_t, floor(n/t)-1 K_t satellites, the rest K_1.
    Variant "ii": nucleus K_a, floor((n-a)/t) K_t satellites, the rest K_1.
    """
    t = t_param(k, r)
    if variant == "i":
        if n < t:
            raise ParameterError("n >= t(k,r)", f"n={n}, t={t}")
        m = n // t
        return _star(t, (t,) * (m - 1) + (1,) * (n - t * m), k, r)
    if variant == "ii":
        if a < t:
            raise ParameterError("a >= t(k,r)", f"a={a}, t={t}")
        if n < a:
            raise ParameterError("n >= a", f"n={n}, a={a}")
        m = (n - a) // t
        return _star(a, (t,) * m + (1,) * (n - a - t * m), k, r)
    raise ParameterError("variant in {i, ii}", f"variant={variant!r}")


def def5_applies(n: int, k: int, l: int, r: int) -> int | None:
    """Number of satellites p if (n, k, l, r) matches a two-clique witness."""
    if r <= 2:
        return None
    t = t_param(k, r)
    if k != comb(t - 1, r - 1) or not t > r or k * r < 2 * t or l < 2 * t + 2:
        return None
    if n < l or (n - l) % t:
        return None
    return (n - l) // t


__all__ = [
    "StarLikeSpec",
    "Def5Layout",
    "build_starlike",
    "build_msh",
    "msh_satellites",
    "build_def5",
    "def5_layout",
    "def5_applies",
    "build_lemma41",
]
