"""Global edge-connectivity of uniform hypergraphs.

Two independent routes compute kappa'(H):

* :func:`kappa_flow` runs n-1 unit-capacity max-flows from vertex 0 in the
  usual hyperedge-splitting network (vertex -> e_in -> e_out -> vertex, with
  only e_in -> e_out of capacity one).
* :func:`kappa_oracle` evaluates d_H(X) for every side X containing vertex 0.

Both report the lexicographically smallest minimum side containing vertex 0,
so their witnesses are comparable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import OracleCapError
from .hypergraph import CutWitness, Hypergraph, cut_size_mask, cut_value, induced, mask_to_tuple

ORACLE_CAP = 20
_INF = 1 << 30


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness: CutWitness | None
    method: str = "flow"


class FlowNetwork:
    """Residual network for hyperedge cuts; reusable across source/sink pairs."""

    def __init__(self, H: Hypergraph):
        self.n = H.n
        n = H.n
        size = n + 2 * H.m
        adj: list[list[int]] = [[] for _ in range(size)]
        head: list[int] = []
        cap: list[int] = []

        def arc(u: int, v: int, c: int) -> None:
            adj[u].append(len(head))
            head.append(v)
            cap.append(c)
            adj[v].append(len(head))
            head.append(u)
            cap.append(0)

        for j, e in enumerate(H.edges):
            e_in, e_out = n + 2 * j, n + 2 * j + 1
            arc(e_in, e_out, 1)
            for v in e:
                arc(v, e_in, _INF)
                arc(e_out, v, _INF)
        self.adj = adj
        self.head = head
        self.cap0 = cap
        self.cap = list(cap)

    def max_flow(self, sources: int, sinks: int, limit: int) -> tuple[int, int]:
        """Flow from vertex mask ``sources`` to ``sinks``, stopping at ``limit``.

        Returns ``(value, side)`` where ``side`` is the vertex mask reachable
        from the sources in the final residual graph.  When ``value < limit``
        that side is a minimum cut separating the two masks.
        """
        self.cap = cap = list(self.cap0)
        adj, head = self.adj, self.head
        n = self.n
        src = [v for v in range(n) if sources >> v & 1]
        flow = 0
        while True:
            parent = {v: -1 for v in src}
            queue = deque(src)
            hit = -1
            while queue and hit < 0:
                u = queue.popleft()
                for a in adj[u]:
                    if cap[a] > 0:
                        w = head[a]
                        if w not in parent:
                            parent[w] = a
                            if w < n and sinks >> w & 1:
                                hit = w
                                break
                            queue.append(w)
            if hit < 0:
                side = 0
                for v in parent:
                    if v < n:
                        side |= 1 << v
                return flow, side
            w = hit
            while parent[w] >= 0:
                a = parent[w]
                cap[a] -= 1
                cap[a ^ 1] += 1
                w = head[a ^ 1]
            flow += 1
            if flow >= limit:
                return flow, 0


def _degree_min(H: Hypergraph) -> int:
    return min(len(x) for x in H.incidence)


def kappa_flow(H: Hypergraph) -> ConnectivityResult:
    """Exact kappa'(H) by max-flow, with the canonical minimum side.

    For n < 2 there is no proper side; the result is kappa 0 with no witness.
    """
    n = H.n
    if n < 2:
        return ConnectivityResult(0, None, "flow")
    net = FlowNetwork(H)
    best = _degree_min(H)
    for v in range(1, n):
        if best == 0:
            break
        f, _ = net.max_flow(1, 1 << v, best)
        best = min(best, f)
    side = _canonical_side(H, net, best)
    return ConnectivityResult(best, cut_value(H, mask_to_tuple(side)), "flow")


def _canonical_side(H: Hypergraph, net: FlowNetwork, kappa: int) -> int:
    # Greedy over vertices 1..n-1: keep v on vertex 0's side whenever some
    # minimum cut agrees with all decisions so far; feasibility is a
    # contracted max-flow bounded by kappa+1.
    n = H.n
    full = (1 << n) - 1
    masks = H.masks
    S, T = 1, 0
    for v in range(1, n):
        if cut_size_mask(masks, S) == kappa:
            return S
        Sv = S | 1 << v
        if Sv == full:
            ok = False
        elif T:
            ok = net.max_flow(Sv, T, kappa + 1)[0] <= kappa
        else:
            ok = any(
                net.max_flow(Sv, 1 << w, kappa + 1)[0] <= kappa for w in range(v + 1, n)
            )
        if ok:
            S = Sv
        else:
            T |= 1 << v
    assert cut_size_mask(masks, S) == kappa
    return S


def lex_min_side(sides: np.ndarray) -> int:
    """Lexicographically smallest vertex tuple among masks sharing bit 0."""
    cand = np.asarray(sides, dtype=np.int64)
    prefix = 1
    while True:
        if np.any(cand == prefix):
            return int(prefix)
        rest = cand & ~np.int64(prefix)
        low = rest & -rest
        nxt = low.min()
        cand = cand[low == nxt]
        prefix |= int(nxt)


def _crossing_counts(masks, sides: np.ndarray) -> np.ndarray:
    cnt = np.zeros(len(sides), dtype=np.int32)
    for em in masks:
        inter = sides & em
        cnt += (inter != 0) & (inter != em)
    return cnt


def kappa_oracle(H: Hypergraph, cap: int = ORACLE_CAP) -> ConnectivityResult:
    """kappa'(H) by exhaustive minimisation of d_H(X) over sides containing 0."""
    n = H.n
    if n < 2:
        return ConnectivityResult(0, None, "oracle")
    if n > cap:
        raise OracleCapError(f"oracle enumeration capped at n <= {cap}, got n={n}")
    sides = (np.arange((1 << (n - 1)) - 1, dtype=np.int64) << 1) | 1
    cnt = _crossing_counts(H.masks, sides)
    best = int(cnt.min())
    side = lex_min_side(sides[cnt == best])
    return ConnectivityResult(best, cut_value(H, mask_to_tuple(side)), "oracle")


def is_more_connected_oracle(H: Hypergraph, k: int) -> bool:
    """kappa'(H) >= k+1, decided by enumeration (n >= 2)."""
    n = H.n
    sides = (np.arange((1 << (n - 1)) - 1, dtype=np.int64) << 1) | 1
    return int(_crossing_counts(H.masks, sides).min()) > k


# -- threshold cuts and decomposition ---------------------------------------


def small_cut(H: Hypergraph, k: int) -> int | None:
    """A side mask X with d_H(X) <= k, or None if kappa'(H) >= k+1 (n >= 2)."""
    for v, inc in enumerate(H.incidence):
        if len(inc) <= k:
            return 1 << v
    net = FlowNetwork(H)
    for v in range(1, H.n):
        f, side = net.max_flow(1, 1 << v, k + 1)
        if f <= k:
            return side
    return None


def _peel(masks, Y: int, k: int) -> int:
    """Drop vertices of degree <= k in H[Y] until none is left (each drop
    splits along a singleton cut of value <= k)."""
    while True:
        inside = [em for em in masks if em & Y == em]
        low = 0
        rest = Y
        while rest:
            bit = rest & -rest
            rest ^= bit
            if sum(1 for em in inside if em & bit) <= k:
                low |= bit
        if not low:
            return Y
        Y &= ~low


def _pieces(H: Hypergraph, k: int, min_size: int = 2, stop_at_first: bool = False) -> list[int]:
    out = []
    floor = max(min_size, 2)
    stack = [(1 << H.n) - 1]
    while stack:
        Y = stack.pop()
        if Y.bit_count() < floor:
            continue
        Y = _peel(H.masks, Y, k)
        if Y.bit_count() < floor:
            continue
        sub, mapping = induced(H, mask_to_tuple(Y), with_mapping=True)
        side = small_cut(sub, k)
        if side is None:
            out.append(Y)
            if stop_at_first:
                break
            continue
        X = 0
        for i, v in enumerate(mapping):
            if side >> i & 1:
                X |= 1 << v
        stack.append(Y & ~X)
        stack.append(X)
    return out


def high_components(H: Hypergraph, k: int) -> list[tuple[int, ...]]:
    """Maximal vertex sets Y, |Y| >= 2, with kappa'(H[Y]) >= k+1.

    Splits recursively along cuts of value <= k: no (k+1)-edge-connected
    subhypergraph can cross such a cut, so the leaves are exactly the
    maximal sets.  Returned sorted.
    """
    if k < 0:
        raise ValueError("threshold k must be >= 0")
    return sorted(mask_to_tuple(Y) for Y in _pieces(H, k))
