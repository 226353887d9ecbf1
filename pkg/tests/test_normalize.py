import random
from math import comb

import pytest

from hxmax.bounds import BoundQuery, s_param, t_param, upper_bound
from hxmax.constructions import build_starlike
from hxmax.errors import ParameterError
from hxmax.normalize import (
    GROUP3,
    Group1,
    Group2,
    SatelliteSpectrum,
    Split,
    apply_op,
    enabled_ops,
    msh_spectrum,
    normalize,
    spectrum_edges,
)


def spec(k, r, l, **counts):
    return SatelliteSpectrum.of(k, r, l, {int(key[1:]): v for key, v in counts.items()})


def test_spectrum_edges_examples():
    assert spectrum_edges(spec(2, 2, 6, S3=2)) == 20
    assert spectrum_edges(spec(2, 2, 6)) == comb(5, 2)
    assert spectrum_edges(spec(2, 2, 6, S1=4)) == 18


def test_spectrum_rejects():
    with pytest.raises(ParameterError):
        spec(2, 2, 6, S2=-1)
    with pytest.raises(ParameterError):
        spec(2, 3, 6, S2=1)
    with pytest.raises(ParameterError):
        spec(2, 2, 6, S6=1)


def test_split_delta():
    out, delta = apply_op(spec(2, 2, 6, S3=1), Split(3))
    assert delta == 3 * 2 - (2 + 3) == 1
    assert out == spec(2, 2, 6, S1=3)


def test_group2_delta():
    out, delta = apply_op(spec(2, 2, 7, S1=1, S5=1), Group2(5))
    assert delta == 5 - 2 == 3
    assert out == spec(2, 2, 7, S6=1)


def test_group3_delta():
    out, delta = apply_op(spec(2, 2, 6, S1=6), GROUP3)
    assert out == spec(2, 2, 6, S1=1, S5=1)
    assert delta == (2 + 10) + 2 - 12 == 2


def test_group1_delta():
    # k=2, r=2: s=4, l=9 gives the open middle range 5..7
    out, delta = apply_op(spec(2, 2, 9, S5=1, S7=1), Group1(5, 7))
    assert out == spec(2, 2, 9, S4=1, S8=1)
    assert delta == comb(7, 1) - comb(4, 1) == 3
    out, delta = apply_op(spec(2, 2, 9, S6=2), Group1(6, 6))
    assert out == spec(2, 2, 9, S5=1, S7=1)
    assert delta == comb(6, 1) - comb(5, 1)


@pytest.mark.parametrize(
    "sp, op",
    [
        (spec(2, 2, 6, S1=2), Split(3)),
        (spec(2, 2, 6, S5=1), Split(5)),
        (spec(2, 2, 9, S5=1), Group1(5, 5)),
        (spec(2, 2, 9, S5=1, S7=1), Group1(7, 5)),
        (spec(2, 2, 7, S5=1), Group2(5)),
        (spec(2, 2, 6, S1=4), GROUP3),
        (spec(2, 2, 4, S1=9), GROUP3),
    ],
)
def test_preconditions(sp, op):
    with pytest.raises(ParameterError, match=str(op).split("(")[0]):
        apply_op(sp, op)


def test_deltas_match_edge_counts():
    rng = random.Random(3)
    for k, r, l in [(2, 2, 9), (3, 3, 8), (2, 3, 7), (4, 2, 10)]:
        for _ in range(100):
            sizes = [1] + list(range(r, l))
            sp = SatelliteSpectrum.of(k, r, l, {i: rng.randint(0, 3) for i in sizes})
            for op in enabled_ops(sp):
                out, delta = apply_op(sp, op)
                assert delta >= 0
                assert out.n == sp.n
                assert spectrum_edges(out) - spectrum_edges(sp) == delta


def test_normalize_example_trace():
    final, trace = normalize(spec(2, 2, 6, S3=2))
    assert [str(s.op) for s in trace] == ["Split(3)", "Split(3)", "Group3"]
    assert [s.edges for s in trace] == [21, 22, 24]
    assert final == spec(2, 2, 6, S1=1, S5=1)
    assert 24 == upper_bound(BoundQuery(11, 2, 6, 2)).value


def test_normalize_fixpoint_on_msh():
    sp = msh_spectrum(17, 2, 7, 2)
    assert normalize(sp) == (sp, [])


def test_normalize_small_l_splits_everything():
    # k=3, r=3: s=5 >= l-1 = 5
    sp = spec(3, 3, 6, S3=1, S4=2, S5=1, S1=2)
    final, trace = normalize(sp)
    assert {str(s.op)[:5] for s in trace} == {"Split"}
    assert final == spec(3, 3, 6, S1=sp.n - 5)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("r", [2, 3])
def test_any_order_reaches_msh(k, r):
    t = t_param(k, r)
    rng = random.Random(k * 10 + r)
    for l in range(t + 1, t + 6):
        for _ in range(40):
            sizes = [1] + list(range(r, l))
            sp = SatelliteSpectrum.of(k, r, l, {i: rng.randint(0, 3) for i in sizes})
            if sp.n < l:
                continue
            target = msh_spectrum(sp.n, k, l, r)
            for order in (None, random.Random(rng.random()), random.Random(rng.random())):
                final, trace = normalize(sp, order)
                assert final == target
                assert all(step.delta >= 0 for step in trace)


def test_materialization_consistency():
    rng = random.Random(5)
    for k, r, l in [(2, 2, 6), (3, 3, 7), (2, 3, 6)]:
        for _ in range(30):
            sizes = [1] + list(range(r, l))
            sp = SatelliteSpectrum.of(k, r, l, {i: rng.randint(0, 2) for i in sizes})
            H = build_starlike(sp.to_spec())
            assert H.n == sp.n and H.m == spectrum_edges(sp)
