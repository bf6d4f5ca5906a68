import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binform import (
    ContextMismatchError,
    EncodingError,
    Field,
    NotOnCurveError,
    OpMeter,
    SingularCurveError,
    Z4Curve,
)
from binform.projective import P1Point
from binform.rng import SplitMix64
from binform.z4form import z4_new

from conftest import oracle_sum


@pytest.fixture(scope="module")
def E5():
    return Z4Curve(Field(5)(2))


@pytest.fixture(scope="module")
def E11():
    return Z4Curve(Field(11)(0x2d3))


def test_torsion_listing_over_gf2():
    F = Field(1)
    E = z4_new(F.one)
    want = [(1, 0, 0, 1), (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]
    assert [tuple(int(x) for x in P.normalized()) for P in E.torsion()] == want
    assert set(E.points()) == set(E.torsion())


def test_zero_parameter_rejected():
    with pytest.raises(SingularCurveError):
        Z4Curve(Field(5).zero)


def test_group_order_divisible_by_four(E5):
    assert len(E5.points()) % 4 == 0
    assert len(E5.points()) == len(E5.weierstrass().points())


def test_points_satisfy_both_quadrics(E5):
    for P in E5.points():
        X0, X1, X2, X3 = P
        assert (X0 + X1 + X2 + X3).square() == E5.e * X0 * X2
        assert X0 * X2 == X1 * X3


def test_neg_and_translation(E5, E11):
    assert E5.neg(E5.O) == E5.O
    assert E5.translate_T(E5.O) == E5.T
    rng = SplitMix64(1)
    for _ in range(100):
        P = E11.random_point(rng=rng)
        Q = P
        for _ in range(4):
            Q = E11.translate_T(Q)
        assert Q == P
        assert E11.translate_T(P) == E11.add(P, E11.T)
        assert E11.add(P, E11.neg(P)) == E11.O


def test_permutations_are_free(E11):
    P = E11.random_point(seed=2)
    with OpMeter() as m:
        E11.neg(P)
        E11.translate_T(P)
    assert m.M == m.S == 0


def test_projections(E5, E11):
    assert E5.pi1(E5.O) == P1Point(E5.field.one, E5.field.zero)
    assert E5.pi1(E5.T) == P1Point(E5.field.one, E5.field.one)
    rng = SplitMix64(3)
    for _ in range(100):
        P = E11.random_point(rng=rng)
        assert E11.pi1(P) == E11.pi1(E11.neg(P))
        assert E11.segre(E11.pi1(P), E11.pi2(P)) == P


def test_segre_examples(E5):
    F = E5.field
    one, zero = F.one, F.zero
    assert E5.segre(P1Point(one, zero), P1Point(one, one)) == E5.O
    assert E5.segre(P1Point(one, one), P1Point(one, zero)) == E5.T


def test_addition_examples(E5):
    assert E5.add(E5.T, E5.T) == E5.T2
    assert E5.double(E5.T) == E5.T2
    assert E5.double(E5.O) == E5.O
    for P in E5.points():
        assert E5.add(P, E5.O) == P


def test_addition_table_against_oracle(E5):
    W = E5.weierstrass()
    pts = E5.points()
    for P, Q in itertools.product(pts, repeat=2):
        assert E5.to_ws(E5.add(P, Q)) == W.add(E5.to_ws(P), E5.to_ws(Q))


def test_doubling_matches_addition_and_meter(E11):
    rng = SplitMix64(5)
    for _ in range(100):
        P = E11.random_point(rng=rng)
        with OpMeter() as m:
            D = E11.double(P)
        assert D == E11.add(P, P)
        assert (m.M, m.S, m.m_c) == (7, 2, 0)


def test_addition_meter(E11):
    P, Q = E11.random_point(seed=1), E11.random_point(seed=2)
    with OpMeter() as m:
        E11.add(P, Q)
    assert m.nonzero() == {"M": 12}


def test_weierstrass_maps(E5):
    F = E5.field
    W = E5.weierstrass()
    assert E5.to_ws(E5.O).is_infinity
    T = E5.to_ws(E5.T)
    assert (T.x, T.y) == (F.one / E5.e, F.zero)  # projectively (1:0:e)
    assert W.is_on_curve(T)
    assert E5.from_ws(W.point()) == E5.O
    for P in E5.points():
        assert E5.from_ws(E5.to_ws(P)) == P
    assert {E5.to_ws(P) for P in E5.points()} == set(W.points())


def test_j_invariant(E11):
    assert E11.j_invariant() == E11.e ** 4 == E11.weierstrass().j_invariant()


def test_validation(E5):
    F = E5.field
    with pytest.raises(NotOnCurveError):
        E5.point(F(1), F(1), F(1), F(1))
    with pytest.raises(EncodingError):
        E5.decode("z4:(0x1:0x0:0x0)")
    with pytest.raises(EncodingError):
        E5.decode("mu4:(0x1:0x0:0x0:0x1)")
    other = Z4Curve(F(3))
    with pytest.raises(ContextMismatchError):
        E5.add(E5.O, other.T)


def test_encode_roundtrip(E11):
    rng = SplitMix64(8)
    for _ in range(50):
        P = E11.random_point(rng=rng)
        assert E11.decode(P.encode()) == P
    assert E11.O.encode() == "z4:(0x1:0x0:0x0:0x1)"


def test_operator_sugar(E11):
    P, Q = E11.random_point(seed=3), E11.random_point(seed=4)
    assert P + Q == E11.add(P, Q)
    assert P - Q == E11.add(P, E11.neg(Q))
    assert 5 * P == E11.smul(5, P)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, (1 << 17) - 1), st.integers(0, 2 ** 64), st.integers(0, 2 ** 30))
def test_smul_against_oracle(e, n, seed):
    E = Z4Curve(Field(17)(e))
    P = E.random_point(seed=seed)
    assert E.to_ws(E.smul(n, P)) == E.weierstrass().smul(n, E.to_ws(P))


def test_random_additions_gf163(F163):
    rng = SplitMix64(6)
    E = Z4Curve(F163.random(rng, nonzero=True))
    for _ in range(100):
        P, Q = E.random_point(rng=rng), E.random_point(rng=rng)
        assert E.to_ws(E.add(P, Q)) == oracle_sum(E, P, Q)
