"""(k,l)-edge-maximality: checking it and generating examples by saturation.

"Property a" is the first half of the definition: no vertex set Y with
|Y| >= l induces a subhypergraph of edge-connectivity >= k+1.  Restricting
to induced subhypergraphs loses nothing, since dropping edges from H[Y]
can only lower kappa'.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .connectivity import _pieces, is_more_connected_oracle
from .errors import OracleCapError, ParameterError
from .hypergraph import Edge, Hypergraph, complement_edges, induced, mask_to_tuple

DEFAULT_ORACLE_CAP = 11


def oracle_cap() -> int:
    return int(os.environ.get("HX_ORACLE_CAP", DEFAULT_ORACLE_CAP))


@dataclass(frozen=True)
class PropertyA:
    holds: bool
    witness: tuple[int, ...] | None
    method: str


@dataclass(frozen=True)
class MaximalityReport:
    property_a: bool
    maximal: bool
    violating_subset: tuple[int, ...] | None = None
    addable_edge: Edge | None = None
    method: str = "fast"

    def to_dict(self) -> dict:
        return {
            "property_a": self.property_a,
            "maximal": self.maximal,
            "violating_subset": list(self.violating_subset) if self.violating_subset else None,
            "addable_edge": list(self.addable_edge) if self.addable_edge else None,
            "method": self.method,
        }


def _resolve(method: str, n: int, cap: int | None) -> str:
    if method not in ("auto", "fast", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    cap = oracle_cap() if cap is None else cap
    if method == "auto":
        return "oracle" if n <= cap else "fast"
    if method == "oracle" and n > cap:
        raise OracleCapError(f"oracle path capped at n <= {cap}, got n={n}")
    return method


_POPCOUNT = {}


def _popcounts(n: int) -> np.ndarray:
    if n not in _POPCOUNT:
        ys = np.arange(1 << n, dtype=np.int64)
        pc = np.zeros(1 << n, dtype=np.int8)
        for v in range(n):
            pc += ((ys >> v) & 1).astype(np.int8)
        _POPCOUNT[n] = pc
    return _POPCOUNT[n]


def _property_a_oracle(H: Hypergraph, k: int, l: int) -> PropertyA:
    n = H.n
    if n < l:
        return PropertyA(True, None, "oracle")
    ys = np.arange(1 << n, dtype=np.int64)
    ys = ys[_popcounts(n) >= l]
    # kappa' <= min degree, so only sets whose induced min degree exceeds k
    # need the exhaustive cut check
    deg = np.zeros((n, len(ys)), dtype=np.int32)
    for e, em in zip(H.edges, H.masks):
        inside = (ys & em) == em
        for v in e:
            deg[v] += inside
    member = ((ys[None, :] >> np.arange(n)[:, None]) & 1).astype(bool)
    mindeg = np.where(member, deg, np.iinfo(np.int32).max).min(axis=0)
    for Y in ys[mindeg > k]:
        sub = induced(H, mask_to_tuple(int(Y)))
        if is_more_connected_oracle(sub, k):
            return PropertyA(False, mask_to_tuple(int(Y)), "oracle")
    return PropertyA(True, None, "oracle")


def property_a(
    H: Hypergraph, k: int, l: int, method: str = "auto", cap: int | None = None
) -> PropertyA:
    """Whether no Y with |Y| >= l has kappa'(H[Y]) >= k+1.

    ``method``: "fast" uses the cut decomposition, "oracle" enumerates every
    Y (n <= cap), "auto" picks the oracle below the cap (HX_ORACLE_CAP,
    default 11).
    """
    if k < 1 or l < 2:
        raise ParameterError("k >= 1 and l >= 2", f"k={k}, l={l}")
    how = _resolve(method, H.n, cap)
    if how == "oracle":
        return _property_a_oracle(H, k, l)
    found = _pieces(H, k, min_size=l, stop_at_first=True)
    if found:
        return PropertyA(False, mask_to_tuple(found[0]), "fast")
    return PropertyA(True, None, "fast")


def _plus(H: Hypergraph, e: Edge) -> Hypergraph:
    return Hypergraph(H.n, H.r, tuple(sorted(H.edges + (e,))))


def is_kl_edge_maximal(
    H: Hypergraph, k: int, l: int, method: str = "auto", cap: int | None = None
) -> MaximalityReport:
    how = _resolve(method, H.n, cap)
    if H.n < l:
        # nothing has >= l vertices, so only the complete hypergraph is maximal
        first = next(complement_edges(H), None)
        return MaximalityReport(True, first is None, None, first, how)
    pa = property_a(H, k, l, how, cap)
    if not pa.holds:
        return MaximalityReport(False, False, pa.witness, None, how)
    for e in complement_edges(H):
        if property_a(_plus(H, e), k, l, how, cap).holds:
            return MaximalityReport(True, False, None, e, how)
    return MaximalityReport(True, True, None, None, how)


def greedy_maximalize(
    H0: Hypergraph,
    k: int,
    l: int,
    seed: int,
    method: str = "fast",
    on_add: Callable[[Hypergraph, Edge], None] | None = None,
) -> Hypergraph:
    """Saturate H0 by adding uniformly random admissible absent edges.

    A candidate rejected once stays rejected (adding edges never destroys a
    dense subset), so each absent edge is tested at most once.  Drawing a
    random remaining candidate and discarding it if inadmissible picks
    uniformly among the currently admissible ones.
    """
    if H0.n < l:
        raise ParameterError("|V(H0)| >= l", f"n={H0.n}, l={l}")
    pa = property_a(H0, k, l, method)
    if not pa.holds:
        raise ParameterError("H0 satisfies property a", f"violating subset {pa.witness}")
    rng = random.Random(seed)
    pool = list(complement_edges(H0))
    H = H0
    while pool:
        i = rng.randrange(len(pool))
        e = pool[i]
        pool[i] = pool[-1]
        pool.pop()
        G = _plus(H, e)
        if property_a(G, k, l, method).holds:
            H = G
            if on_add is not None:
                on_add(H, e)
    return H
