import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings

from hxmax.connectivity import high_components, kappa_flow, kappa_oracle
from hxmax.constructions import build_msh
from hxmax.errors import OracleCapError
from hxmax.hypergraph import build, complete, degrees, empty, induced

from test_hypergraph import hypergraphs


def disjoint_union(*parts, joins=()):
    edges, offset = [], 0
    for H in parts:
        edges += [tuple(v + offset for v in e) for e in H.edges]
        offset += H.n
    return build(offset, parts[0].r, list(edges) + list(joins))


def test_complete_k53():
    res = kappa_flow(complete(5, 3))
    assert res.kappa == 6 == comb(4, 2)
    assert len(res.witness.side) == 1


def test_msh_witness_is_single_satellite():
    H = build_msh(10, 2, 4, 2)
    for res in (kappa_flow(H), kappa_oracle(H)):
        assert res.kappa == 2
        small = min(res.witness.side, res.witness.other_side(H.n), key=len)
        assert len(small) == 1 and small[0] >= 3


def test_disconnected():
    H = disjoint_union(complete(4, 3), complete(4, 3))
    assert kappa_flow(H).kappa == 0
    assert kappa_oracle(H).kappa == 0


def test_small_cases():
    assert kappa_oracle(complete(2, 2)).kappa == 1
    assert kappa_oracle(empty(3, 2)).kappa == 0
    assert kappa_flow(empty(1, 2)) .witness is None


def test_oracle_cap():
    with pytest.raises(OracleCapError):
        kappa_oracle(empty(21, 2))


@pytest.mark.parametrize("n", range(2, 10))
@pytest.mark.parametrize("r", [2, 3, 4])
def test_kappa_complete(n, r):
    if r > n:
        return
    assert kappa_flow(complete(n, r)).kappa == comb(n - 1, r - 1)


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=9))
def test_flow_matches_oracle(H):
    a, b = kappa_flow(H), kappa_oracle(H)
    assert a.kappa == b.kappa
    assert a.witness.side == b.witness.side
    assert a.kappa == a.witness.value
    assert a.kappa <= degrees(H).min_degree


def _brute_components(H, k):
    good = []
    for size in range(2, H.n + 1):
        for Y in itertools.combinations(range(H.n), size):
            if kappa_oracle(induced(H, Y)).kappa >= k + 1:
                good.append(frozenset(Y))
    return sorted(
        tuple(sorted(Y)) for Y in good if not any(Y < Z for Z in good)
    )


def test_high_components_examples():
    assert high_components(complete(6, 3), 3) == [tuple(range(6))]
    assert high_components(build_msh(10, 2, 4, 2), 2) == []
    H = disjoint_union(complete(5, 3), complete(5, 3), joins=[(0, 5, 6), (1, 2, 7)])
    assert high_components(H, 3) == [(0, 1, 2, 3, 4), (5, 6, 7, 8, 9)]


def test_high_components_match_exhaustive():
    rng = random.Random(7)
    for _ in range(60):
        r = rng.choice([2, 3])
        n = rng.randint(r, 8)
        dens = rng.choice([0.3, 0.6, 0.9])
        H = build(n, r, [e for e in itertools.combinations(range(n), r) if rng.random() < dens])
        k = rng.randint(0, 4)
        assert high_components(H, k) == _brute_components(H, k)
