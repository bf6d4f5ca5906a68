import itertools

import pytest

from binform import (
    ContextMismatchError,
    ExceptionalInputError,
    Field,
    Mu4Curve,
    Mu4NonsplitCurve,
    OpMeter,
    SingularCurveError,
    SupersingularError,
    Z4Curve,
    curve_from_j,
)
from binform.mu4form import COMPLETE_ORDER, mu4_new_nonsplit, mu4_new_split
from binform.rng import SplitMix64

from conftest import curve_family


@pytest.fixture(scope="module")
def C5():
    return Mu4Curve(Field(5)(2))


@pytest.fixture(scope="module")
def C11():
    return Mu4Curve(Field(11)(0x5e1))


def coords(P):
    return tuple(P.normalized())


def test_gf2_torsion():
    F = Field(1)
    C = mu4_new_split(F.one)
    assert tuple(int(x) for x in C.O.normalized()) == (1, 1, 0, 1)
    assert tuple(int(x) for x in C.T.normalized()) == (1, 1, 1, 0)


def test_torsion_coordinates(C5):
    F, c = C5.field, C5.c
    one, zero = F.one, F.zero
    assert C5.O == C5.point(c, one, zero, one)
    assert C5.T == C5.point(one, c, one, zero)
    assert C5.T2 == C5.point(zero, one, c, one)
    assert C5.T3 == C5.point(one, zero, one, c)
    assert C5.neg(C5.T) == C5.T3
    assert C5.neg(C5.O) == C5.O


def test_parameters_rejected():
    F = Field(5)
    with pytest.raises(SingularCurveError):
        Mu4Curve(F.zero)
    with pytest.raises(SingularCurveError):
        mu4_new_nonsplit(F.zero)


def test_j_invariant(C5, C11):
    for C in (C5, C11):
        assert C.j_invariant() == C.c ** 8 == C.weierstrass().j_invariant()
        N = C.nonsplit_partner()
        assert N.j_invariant() == N.s ** -2 == C.j_invariant()


def test_translation_has_order_four(C11):
    rng = SplitMix64(1)
    for _ in range(100):
        P = C11.random_point(rng=rng)
        Q = P
        for _ in range(4):
            Q = C11.translate_T(Q)
        assert Q == P
        assert C11.translate_T(P) == C11.add(P, C11.T)


def test_complete_addition_examples(C5):
    for P in C5.points():
        assert C5.add_complete(P, C5.O) == P
    assert C5.add_complete(C5.T, C5.T) == C5.T2
    assert C5.double(C5.T) == C5.T2
    assert C5.double(C5.O) == C5.O


def test_exhaustive_law_one_exceptions(C5):
    pts = C5.points()
    for P, Q in itertools.product(pts, repeat=2):
        zero = not any(C5.addition_law(P, Q, 1))
        assert zero == (C5.add(P, C5.neg(Q)) == C5.T2)
        if zero:
            with pytest.raises(ExceptionalInputError):
                C5.add_fast(P, Q)


def test_complete_addition_against_oracle(C5):
    W = C5.weierstrass()
    pts = C5.points()
    for P, Q in itertools.product(pts, repeat=2):
        R = C5.add_complete(P, Q)
        assert C5.to_ws(R) == W.add(C5.to_ws(P), C5.to_ws(Q))
        assert C5.add(P, Q) == R
    assert COMPLETE_ORDER[0] == 1


def test_fast_addition_random(C11):
    rng = SplitMix64(2)
    for _ in range(200):
        P, Q = C11.random_point(rng=rng), C11.random_point(rng=rng)
        with OpMeter() as m:
            R = C11.add_fast(P, Q)
        assert R == C11.add_complete(P, Q)
        assert (m.M, m.S, m.m_c) == (7, 2, 2)


@pytest.mark.parametrize("m", [5, 11, 17])
def test_doubling(m):
    rng = SplitMix64(m)
    F = Field(m)
    C = Mu4Curve(F.random(rng, nonzero=True))
    for _ in range(1000 // 3 + 1):
        P = C.random_point(rng=rng)
        with OpMeter() as meter:
            D = C.double(P)
        assert D == C.add_complete(P, P)
        assert C.to_ws(D) == C.weierstrass().double(C.to_ws(P))
        assert (meter.M, meter.S, meter.m_c) == (2, 5, 7)


def test_projective_addition(C5, C11):
    F = C5.field
    for P in C5.points():
        assert C5.proj_add(P, C5.O) == (C5.pi1(P), C5.pi2(P))
    assert C5.proj_add(C5.T, C5.T)[0] == C5.pi1(C5.T2)
    E = C11.z4_partner()
    rng = SplitMix64(3)
    for _ in range(500):
        P, Q = C11.random_point(rng=rng), C11.random_point(rng=rng)
        u, v = C11.proj_add(P, Q)
        assert E.segre(u, v) == C11.iota(C11.add(P, Q))
    assert F.one


def test_iota_values(C5):
    E = C5.z4_partner()
    assert isinstance(E, Z4Curve) and E.e == C5.c.square()
    assert C5.iota(C5.O) == E.O
    assert C5.iota(C5.T2) == E.T2
    # the projections send T_C to 3T_E; see the decisions ledger
    assert C5.iota(C5.T) == E.T3
    assert C5.iota(C5.T3) == E.T


def test_iota_is_an_isomorphism(C5):
    E = C5.z4_partner()
    pts = C5.points()
    images = [C5.iota(P) for P in pts]
    assert set(images) == set(E.points())
    for P in pts:
        assert C5.iota_inv(C5.iota(P)) == P
    for Q in E.points():
        assert C5.iota(C5.iota_inv(Q)) == Q
    for P, Q in itertools.product(pts, repeat=2):
        assert C5.iota(C5.add(P, Q)) == E.add(C5.iota(P), C5.iota(Q))


def test_iota_inverse_rejects_wrong_curve(C5):
    other = Z4Curve(Field(5)(7))
    with pytest.raises(ContextMismatchError):
        C5.iota_inv(other.T)


def test_nonsplit_identity_and_maps(C5, C11):
    N = C5.nonsplit_partner()
    F = C5.field
    assert isinstance(N, Mu4NonsplitCurve)
    assert N.s == C5.c ** -4
    assert C5.to_nonsplit(C5.O) == N.O == N.point(F.one, F.one, F.zero, F.one)
    for P in C5.points():
        assert N.to_split(C5.to_nonsplit(P)) == P
    X0, X1, X2, X3 = N.O
    assert (X0 + X2).square() == X1 * X3
    assert N.s * (X1 + X3).square() == X0 * X2


def test_nonsplit_addition(C11):
    N = C11.nonsplit_partner()
    rng = SplitMix64(4)
    for _ in range(1000):
        P, Q = C11.random_point(rng=rng), C11.random_point(rng=rng)
        Pn, Qn = C11.to_nonsplit(P), C11.to_nonsplit(Q)
        assert N.add(Pn, Qn) == C11.to_nonsplit(C11.add(P, Q))
    P, Q = N.random_point(seed=1), N.random_point(seed=2)
    assert N.add(P, N.O) == P
    with OpMeter() as m:
        N.add(P, Q)
    assert m.nonzero() == {"M": 7, "S": 2}
    with OpMeter() as m:
        N.double(P)
    assert m.nonzero() == {"M": 2, "S": 5, "m_s": 2}


def test_nonsplit_exhaustive(C5):
    N = C5.nonsplit_partner()
    W = N.weierstrass()
    pts = N.points()
    for P, Q in itertools.product(pts, repeat=2):
        assert N.to_ws(N.add(P, Q)) == W.add(N.to_ws(P), N.to_ws(Q))
    for P in pts:
        assert N.double(P) == N.add(P, P)


def test_weierstrass_maps(C5):
    F, c = C5.field, C5.c
    W = C5.weierstrass()
    assert W.a4 == c ** -4
    assert C5.to_ws(C5.O).is_infinity
    T = C5.to_ws(C5.T)  # (c^2 : c^2 : c^4)
    assert (T.x, T.y) == (c ** -2, c ** -2)
    assert W.is_on_curve(T)
    for P in C5.points():
        assert C5.from_ws(C5.to_ws(P)) == P
    assert C5.from_ws(W.point()) == C5.O
    assert F.one


def test_curve_from_j():
    F = Field(11)
    E, C = curve_from_j(F.one)
    assert C.c == F.one
    rng = SplitMix64(5)
    for _ in range(10):
        c = F.random(rng, nonzero=True)
        E, C = curve_from_j(c ** 8)
        assert C.c == c and E.e == c.square()
        assert E.j_invariant() == C.j_invariant() == c ** 8
    E, C = curve_from_j(F(0x2a1))
    assert len(E.weierstrass().points()) == len(C.weierstrass().points())
    with pytest.raises(SupersingularError):
        curve_from_j(F.zero)


def test_model_family_shares_weierstrass(C11):
    E, C, N = curve_family(C11.field, C11.c)
    assert E.weierstrass() == C.weierstrass() == N.weierstrass()
    assert mu4_new_split(C11.c) == C11


def test_random_point_determinism(C11):
    assert C11.random_point(seed=9) == C11.random_point(seed=9)
    assert C11.contains(tuple(C11.random_point(seed=10)))
