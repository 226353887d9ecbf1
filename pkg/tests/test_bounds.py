from math import comb

import pytest

from hxmax.bounds import (
    BoundQuery,
    g_profile,
    kt_bounds,
    lemma41_counts,
    lower_bound,
    msh_edge_count,
    s_param,
    t_param,
    upper_bound,
)
from hxmax.errors import ParameterError


def t_brute(k, r):
    return max(t for t in range(1, 200) if comb(t - 1, r - 1) <= k)


def s_brute(k, r):
    return max(s for s in range(1, 400) if k + comb(s, r) <= k * s)


@pytest.mark.parametrize("k, r, t, s", [(2, 2, 3, 4), (3, 3, 4, 5), (2, 3, 3, 4)])
def test_params_examples(k, r, t, s):
    assert t_param(k, r) == t
    assert s_param(k, r) == s


@pytest.mark.parametrize("k", range(2, 13))
@pytest.mark.parametrize("r", range(2, 13))
def test_params_match_definition(k, r):
    t, s = t_param(k, r), s_param(k, r)
    assert t == t_brute(k, r)
    assert s == s_brute(k, r)
    assert comb(t - 1, r - 1) <= k < comb(t, r - 1)
    assert k + comb(s, r) <= k * s and k + comb(s + 1, r) > k * (s + 1)
    assert t <= s
    assert (t - 1) * k - comb(t, r) >= 0


@pytest.mark.parametrize("k, r", [(1, 2), (2, 1), (0, 0)])
def test_params_reject(k, r):
    with pytest.raises(ParameterError):
        t_param(k, r)
    with pytest.raises(ParameterError):
        s_param(k, r)


@pytest.mark.parametrize(
    "n, k, l, r, value, branch",
    [(10, 2, 4, 2, 17, "iii"), (13, 2, 6, 2, 28, "ii"), (17, 2, 7, 2, 44, "i")],
)
def test_upper_examples(n, k, l, r, value, branch):
    b = upper_bound(BoundQuery(n, k, l, r))
    assert (b.value, b.branch) == (value, branch)
    assert msh_edge_count(n, k, l, r) == value


@pytest.mark.parametrize(
    "n, k, l, r, value, branch",
    [(5, 2, 4, 2, 7, "i"), (10, 2, 4, 2, 15, "ii"), (14, 3, 10, 3, 30, "iii"), (15, 3, 11, 3, 40, "iv")],
)
def test_lower_examples(n, k, l, r, value, branch):
    b = lower_bound(BoundQuery(n, k, l, r))
    assert (b.value, b.branch) == (value, branch)


def test_lower_branch_boundary_n_equals_2t():
    # n = 2t fails the strict n < 2t test, so branch (ii) applies
    assert lower_bound(BoundQuery(6, 2, 4, 2)).branch == "ii"


@pytest.mark.parametrize(
    "n, k, l, r, constraint",
    [(3, 2, 4, 2, "n >= l"), (10, 2, 3, 2, "l >= t(k,r)+1"), (10, 1, 4, 2, "k >= 2")],
)
def test_query_rejects(n, k, l, r, constraint):
    with pytest.raises(ParameterError) as exc:
        BoundQuery(n, k, l, r)
    assert exc.value.constraint == constraint


def validation_grid():
    for r in (2, 3):
        for k in (2, 3, 4):
            t = t_param(k, r)
            for l in range(t + 1, t + 7):
                for n in range(l, l + 11):
                    yield n, k, l, r


def test_bound_grid():
    for n, k, l, r in validation_grid():
        q = BoundQuery(n, k, l, r)
        up = upper_bound(q).value
        assert up == msh_edge_count(n, k, l, r)
        assert lower_bound(q).value <= up
        i, ii = lemma41_counts(n, t_param(k, r), k, r)
        assert i <= comb(n, r) and ii <= comb(n, r)


def test_kt_bounds_examples():
    assert kt_bounds(6, 2, 2) == (8, 9)
    assert kt_bounds(3, 2, 2) == (3, 3)
    assert kt_bounds(4, 3, 3) == (4, 4)
    with pytest.raises(ParameterError):
        kt_bounds(3, 3, 3)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("r", [2, 3])
def test_kt_lower_is_lemma41_i(k, r):
    t = t_param(k, r)
    for n in range(t, t + 15):
        assert kt_bounds(n, k, r)[0] == lemma41_counts(n, t, k, r)[0]


def test_lemma41_examples():
    assert lemma41_counts(6, 3, 2, 2) == (8, 8)
    t = t_param(3, 3)
    assert lemma41_counts(t, t, 3, 3)[1] == comb(t, 3)
    assert lemma41_counts(8, 5, 3, 3)[1] == 19 <= comb(8, 3)
    with pytest.raises(ParameterError):
        lemma41_counts(8, 3, 3, 3)
    with pytest.raises(ParameterError):
        lemma41_counts(4, 5, 3, 3)


def test_g_profile_examples():
    assert g_profile(6, 3, 1) == 10
    assert g_profile(6, 3, 2) == 4
    assert g_profile(6, 3, 3) == 2
    with pytest.raises(ParameterError):
        g_profile(6, 3, 6)


def test_g_profile_decreasing():
    for n in range(2, 41):
        for r in range(2, min(n, 6) + 1):
            vals = [g_profile(n, r, x) for x in range(1, n // 2 + 1)]
            assert all(a >= b for a, b in zip(vals, vals[1:]))
