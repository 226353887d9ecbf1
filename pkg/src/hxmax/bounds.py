"""Thresholds t(k,r), s(k,r) and the edge-count bounds for (k,l)-edge-maximal
r-uniform hypergraphs.  Everything is exact integer arithmetic; ``math.comb``
already returns 0 when the lower index exceeds the upper one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ParameterError


def _check_kr(k: int, r: int) -> None:
    if k < 2:
        raise ParameterError("k >= 2", f"k={k}")
    if r < 2:
        raise ParameterError("r >= 2", f"r={r}")


def t_param(k: int, r: int) -> int:
    """Largest t with C(t-1, r-1) <= k."""
    _check_kr(k, r)
    t = r
    while comb(t, r - 1) <= k:
        t += 1
    return t


def s_param(k: int, r: int) -> int:
    """Largest s with k + C(s, r) <= k*s."""
    _check_kr(k, r)
    # k + C(x,r) - kx is <= 0 on [1, s] and positive beyond, and s >= t
    s = t_param(k, r)
    while k + comb(s + 1, r) <= k * (s + 1):
        s += 1
    return s


@dataclass(frozen=True)
class ParamPair:
    k: int
    r: int
    t: int
    s: int


def params(k: int, r: int) -> ParamPair:
    return ParamPair(k, r, t_param(k, r), s_param(k, r))


def deficit(k: int, r: int) -> int:
    """(t-1)k - C(t,r): edges saved per K_t block in the lower bounds."""
    t = t_param(k, r)
    return (t - 1) * k - comb(t, r)


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    l: int
    r: int

    def __post_init__(self):
        _check_kr(self.k, self.r)
        t = t_param(self.k, self.r)
        if self.l < t + 1:
            raise ParameterError("l >= t(k,r)+1", f"l={self.l}, t={t}")
        if self.n < self.l:
            raise ParameterError("n >= l", f"n={self.n}, l={self.l}")

    @property
    def t(self) -> int:
        return t_param(self.k, self.r)

    @property
    def s(self) -> int:
        return s_param(self.k, self.r)

    @property
    def p(self) -> int:
        return self.n // (self.l - 1)

    @property
    def q(self) -> int:
        return self.n % (self.l - 1)

    @property
    def a(self) -> int:
        return (self.l + 1) // 2

    @property
    def b(self) -> int:
        return self.l // 2


@dataclass(frozen=True)
class Bound:
    value: int
    branch: str


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    l: int
    r: int
    t: int
    s: int
    p: int
    q: int
    lower: int
    lower_branch: str
    upper: int
    upper_branch: str


def upper_bound(q: BoundQuery) -> Bound:
    n, k, l, r = q.n, q.k, q.l, q.r
    s, p, rem = q.s, q.p, q.q
    if l - 1 > s:
        if rem > s:
            return Bound(p * comb(l - 1, r) + p * k + comb(rem, r), "i")
        return Bound(p * comb(l - 1, r) + (p - 1 + rem) * k, "ii")
    return Bound(comb(l - 1, r) + (n - l + 1) * k, "iii")


def msh_edge_count(n: int, k: int, l: int, r: int) -> int:
    """Edges of the maximal star-like family, counted from its satellites."""
    q = BoundQuery(n, k, l, r)
    s = q.s
    nucleus = comb(l - 1, r)
    if l - 1 <= s:
        return nucleus + (n - l + 1) * k
    big = (q.p - 1) * (k + comb(l - 1, r))
    if q.q > s:
        return nucleus + big + k + comb(q.q, r)
    return nucleus + big + q.q * k


def lower_bound(q: BoundQuery) -> Bound:
    n, k, l, r, t = q.n, q.k, q.l, q.r, q.t
    c = deficit(k, r)
    if n < 2 * t:
        return Bound(comb(l - 1, r) + (n - l + 1) * k, "i")
    if l <= 2 * t:
        return Bound((n - 1) * k - c * (n // t), "ii")
    if l % 2 == 0:
        a = q.a
        return Bound((n - 2 * a + 1) * k + 2 * comb(a, r) - c * ((n - 2 * a) // t), "iii")
    b = q.b
    return Bound(
        (n - 2 * b) * k + comb(b, r) + comb(b + 1, r) - c * ((n - 2 * b - 1) // t), "iv"
    )


def bounds_report(n: int, k: int, l: int, r: int) -> BoundsReport:
    q = BoundQuery(n, k, l, r)
    lo, up = lower_bound(q), upper_bound(q)
    return BoundsReport(n, k, l, r, q.t, q.s, q.p, q.q, lo.value, lo.branch, up.value, up.branch)


def kt_bounds(n: int, k: int, r: int) -> tuple[int, int]:
    """(lower, upper) edge counts when l equals t(k,r)."""
    t = t_param(k, r)
    if n < t:
        raise ParameterError("n >= t(k,r)", f"n={n}, t={t}")
    upper = comb(t, r) + (n - t) * k
    lower = (n - 1) * k - deficit(k, r) * (n // t)
    return lower, upper


def lemma41_counts(n: int, a: int, k: int, r: int) -> tuple[int, int]:
    """Edge counts of the two star-like witnesses with K_t blocks.

    Both are at most C(n, r) since they count edges of r-uniform
    hypergraphs on n vertices.
    """
    t = t_param(k, r)
    if a < t:
        raise ParameterError("a >= t(k,r)", f"a={a}, t={t}")
    if n < a:
        raise ParameterError("n >= a", f"n={n}, a={a}")
    c = deficit(k, r)
    count_i = (n - 1) * k - c * (n // t)
    count_ii = (n - a) * k + comb(a, r) - c * ((n - a) // t)
    return count_i, count_ii


def g_profile(n: int, r: int, x: int) -> int:
    if r < 2 or n < r:
        raise ParameterError("n >= r >= 2", f"n={n}, r={r}")
    if not 1 <= x <= n - 1:
        raise ParameterError("1 <= x <= n-1", f"x={x}, n={n}")
    return comb(x, r) + comb(n - x, r)
