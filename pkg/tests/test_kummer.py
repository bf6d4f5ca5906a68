import itertools

import pytest

from binform import (
    EncodingError,
    Field,
    KummerPair,
    Mu4Curve,
    NotOnCurveError,
    OpMeter,
    OrientedKummerCurve,
    UnsupportedBaseError,
    Z4Curve,
    ladder,
    smul_recover,
)
from binform.kummer import decode_pair, kappa, kappa_inv, lambda_inv, lambda_map, montgomery_step, oriented_curve
from binform.projective import P1Point
from binform.rng import SplitMix64


@pytest.fixture(scope="module")
def C5():
    return Mu4Curve(Field(5)(2))


@pytest.fixture(scope="module")
def E5(C5):
    return C5.z4_partner()


def generic_bases(curve, k=4):
    return [P for P in curve.points() if P not in (curve.O, curve.T2)][:k]


def ladder_base(curve, rng):
    """A random point the ladder accepts (not O or 2T)."""
    while True:
        P = curve.random_point(rng=rng)
        if P not in (curve.O, curve.T2):
            return P


def line(K, Q):
    return K._line(Q)


def all_pairs(field):
    ones = [P1Point(field.one, x) for x in field.elements()] + [P1Point(field.zero, field.one)]
    return [KummerPair(u, v) for u, v in itertools.product(ones, repeat=2)]


def test_base_restrictions(E5, C5):
    K = oriented_curve(E5.T)
    assert K.base_line() == P1Point(E5.field.one, E5.field.one)
    for curve in (E5, C5, C5.nonsplit_partner()):
        for bad in (curve.O, curve.T2):
            with pytest.raises(UnsupportedBaseError):
                OrientedKummerCurve(bad)


def test_lift_lands_on_curve():
    E = Z4Curve(Field(11)(0x1b7))
    rng = SplitMix64(1)
    K = OrientedKummerCurve(E.random_point(rng=rng))
    for _ in range(500):
        assert K.contains(K.lift(E.random_point(rng=rng)))


def test_lift_of_base(E5, C5):
    for P in generic_bases(E5) + generic_bases(C5):
        K = OrientedKummerCurve(P)
        F = K.field
        assert K.lift(P) == KummerPair(K.base_line(), P1Point(F.one, F.zero))


@pytest.mark.parametrize("model", ["z4", "mu4", "mu4ns"])
def test_identification_is_bijective(C5, model):
    curve = {"z4": C5.z4_partner(), "mu4": C5, "mu4ns": C5.nonsplit_partner()}[model]
    pts = curve.points()
    on_curve = None
    for P in generic_bases(curve):
        K = OrientedKummerCurve(P)
        lifts = [K.lift(Q) for Q in pts]
        assert len(set(lifts)) == len(pts)
        for Q, pair in zip(pts, lifts):
            assert K.recover(pair) == Q
        on_curve = [p for p in all_pairs(K.field) if K.contains(p)]
        assert set(on_curve) == set(lifts)
    assert on_curve


def test_kappa_not_negation_invariant(E5):
    P = generic_bases(E5)[0]
    K = OrientedKummerCurve(P)
    generic = [Q for Q in E5.points() if K.lift(Q) != K.lift(E5.neg(Q))]
    assert len(generic) > len(E5.points()) // 2
    for Q in generic[:5]:
        assert K.lift(E5.neg(Q)) == KummerPair(line(K, Q), line(K, E5.add(Q, P)))


def lambda_quadruples(K, pair):
    """Both inverse quadruples, written out from the defining formulas."""
    s0, s1, s2, s3 = K._split_base
    c = K.split.c
    (U0, U1), (V0, V1) = pair
    q1 = ((s1 + s3) * U0 ** 2 * V0, (s0 * U0 ** 2 + s2 * U1 ** 2) * V1 + c * s1 * U0 * U1 * V0,
          (s1 + s3) * U1 ** 2 * V0, (s0 * U0 ** 2 + s2 * U1 ** 2) * V1 + c * s3 * U0 * U1 * V0)
    q2 = ((s1 + s3) * U0 ** 2 * V1, (s2 * U0 ** 2 + s0 * U1 ** 2) * V0 + c * s3 * U0 * U1 * V1,
          (s1 + s3) * U1 ** 2 * V1, (s2 * U0 ** 2 + s0 * U1 ** 2) * V0 + c * s1 * U0 * U1 * V1)
    return q1, q2


def test_lambda_branches_agree(C5):
    from binform.projective import proj_equal

    both = 0
    for P in generic_bases(C5):
        K = OrientedKummerCurve(P)
        for Q in C5.points():
            pair = lambda_map(K, Q)
            assert lambda_inv(K, pair) == Q
            q1, q2 = lambda_quadruples(K, pair)
            if any(q1) and any(q2):
                both += 1
                assert proj_equal(q1, q2)
            for q in (q1, q2):
                if any(q):
                    assert C5._pt(q) == Q
    assert both


def test_kappa_functions(E5):
    P = generic_bases(E5)[1]
    K = OrientedKummerCurve(P)
    for Q in E5.points():
        assert kappa_inv(K, kappa(K, Q)) == Q


@pytest.mark.parametrize("variant", ["S4", "S5"])
@pytest.mark.parametrize("model", ["z4", "mu4"])
def test_step_matches_group_law(C5, variant, model):
    curve = C5 if model == "mu4" else C5.z4_partner()
    for P in generic_bases(curve, 3):
        K = OrientedKummerCurve(P)
        for Q in curve.points():
            pair = K.lift(Q)
            Q2 = curve.double(Q)
            assert K.step(pair, 1, variant) == K.lift(Q2)
            assert K.step(pair, 0, variant) == K.lift(curve.add(Q2, curve.neg(P)))
            assert montgomery_step(K, pair, 1, variant) == K.step(pair, 1, variant)


def test_step_doubles_first_factor(E5):
    K = OrientedKummerCurve(generic_bases(E5)[0])
    F = K.field
    pair = K.lift(E5.T)
    assert pair.u == P1Point(F.one, F.one)
    assert K.step(pair, 1).u == P1Point(F.zero, F.one) == line(K, E5.T2)


@pytest.mark.parametrize("variant,counts", [("S5", (4, 5, 1, 1)), ("S4", (4, 4, 1, 2))])
def test_step_meter(variant, counts, F163):
    rng = SplitMix64(2)
    E = Z4Curve(F163.random(rng, nonzero=True))
    for _ in range(20):
        P, Q = E.random_point(rng=rng), E.random_point(rng=rng)
        K = OrientedKummerCurve(P)
        pair = K.lift(Q)
        for bit in (0, 1):
            with OpMeter() as m:
                K.step(pair, bit, variant)
            assert (m.M, m.S, m.m_t, m.m_c) == counts
            assert m.I == 0


def test_ladder_small_scalars(E5):
    P = generic_bases(E5)[0]
    K = OrientedKummerCurve(P)
    F = K.field
    assert K.ladder(0) == KummerPair(K.base_line(), P1Point(F.one, F.zero))
    assert K.ladder(1) == KummerPair(line(K, E5.double(P)), line(K, P))
    for n in range(40):
        assert K.ladder(n) == KummerPair(line(K, E5.smul(n + 1, P)), line(K, E5.smul(n, P)))
    with pytest.raises(ValueError):
        K.ladder(-1)


def test_ladder_second_component_against_oracle(F17):
    rng = SplitMix64(3)
    E = Z4Curve(F17.random(rng, nonzero=True))
    W = E.weierstrass()
    for _ in range(1000):
        P = ladder_base(E, rng)
        n = rng.getrandbits(20)
        K = OrientedKummerCurve(P)
        assert K.ladder(n).v == line(K, E.from_ws(W.smul(n, E.to_ws(P))))


def test_smul_recover_edges(C5):
    for curve in (C5.z4_partner(), C5, C5.nonsplit_partner()):
        W = curve.weierstrass()
        for P in generic_bases(curve, 6):
            n = W.order_of(curve.to_ws(P))
            assert smul_recover(1, P) == P
            assert smul_recover(0, P) == curve.O
            assert smul_recover(n, P) == curve.O
            assert smul_recover(n + 1, P) == P
            assert smul_recover(n - 1, P) == curve.neg(P)
            assert smul_recover(-5, P) == curve.neg(curve.smul(5, P))


@pytest.mark.parametrize("m", [11, 17])
def test_smul_recover_against_oracle(m):
    rng = SplitMix64(m)
    F = Field(m)
    C = Mu4Curve(F.random(rng, nonzero=True))
    for curve in (C.z4_partner(), C, C.nonsplit_partner()):
        W = curve.weierstrass()
        for _ in range(150):
            P = ladder_base(curve, rng)
            n = rng.getrandbits(64)
            R = smul_recover(n, P, "S5" if n & 1 else "S4")
            assert curve.to_ws(R) == W.smul(n, curve.to_ws(P))


def test_ladder_trace_and_meter(F163):
    rng = SplitMix64(4)
    E = Z4Curve(F163.random(rng, nonzero=True))
    P = E.random_point(rng=rng)
    n = rng.getrandbits(64) | 1 << 63
    trace = []
    with OpMeter() as total:
        ladder(n, P, trace=trace)
    assert [b for b, _ in trace] == [int(ch) for ch in bin(n)[2:]]
    counts = {m.nonzero() == {"M": 4, "S": 4, "m_c": 2, "m_t": 1} for _, m in trace}
    assert counts == {True}
    assert total.nonzero() == {"M": 256, "S": 256, "m_c": 128, "m_t": 64}


def test_pair_encoding(E5):
    K = OrientedKummerCurve(generic_bases(E5)[0])
    for Q in E5.points():
        pair = K.lift(Q)
        text = pair.encode()
        assert text.startswith("kum:((")
        assert decode_pair(K.field, text) == pair
    with pytest.raises(EncodingError):
        decode_pair(K.field, "kum:(0x1:0x0)")


def test_recover_rejects_off_curve_pair(E5):
    K = OrientedKummerCurve(generic_bases(E5)[0])
    bad = next(p for p in all_pairs(K.field) if not K.contains(p))
    with pytest.raises(NotOnCurveError):
        K.recover(bad)
    with pytest.raises(NotOnCurveError):
        K.pair(bad.u, bad.v)
