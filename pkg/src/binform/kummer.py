"""Kummer-oriented curves and the Montgomery ladder with point recovery.

For a point P that is not 2-torsion, the curve is identified with the set of
pairs (line(Q), line(Q - P)) in P^1 x P^1, where line() is the projection to
the Kummer line.  That set is a curve of bidegree (2, 2):

    t0^2 (U0V1 + U1V0)^2 + t1^2 (U0V0 + U1V1)^2 = e t0 t1 U0 U1 V0 V1,

with (t0:t1) = line(P) and e the Z/4Z-normal-form parameter (c^2 for the
mu4 parameter c).  The Montgomery step (Q, R) -> (2Q, Q + R) keeps the
difference Q - R = P, so a ladder over the bits of n ends at
(line((n+1)P), line(nP)), and the inverse of the identification gives back
(n+1)P exactly.

>>> from binform.binfield import Field
>>> from binform.z4form import Z4Curve
>>> E = Z4Curve(Field(11)(0x123))
>>> P = E.random_point(seed=7)
>>> smul_recover(1000, P) == E.smul(1000, P)
True
"""

from __future__ import annotations

from .binfield import OpMeter, active_meter, unmetered
from .errors import ContextMismatchError, EncodingError, NotOnCurveError, UnsupportedBaseError
from .mu4form import Mu4Curve, Mu4Point
from .projective import P1Point, format_tuple, parse_tuple
from .z4form import Z4Point

VARIANTS = ("S4", "S5")

KummerPoint = P1Point


class KummerPair:
    """((U0:U1), (V0:V1)); equality is projective in each factor."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        self.u, self.v = u, v

    def __iter__(self):
        yield self.u
        yield self.v

    def __eq__(self, other):
        if not isinstance(other, KummerPair):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def swap(self):
        return KummerPair(self.v, self.u)

    def encode(self):
        return f"kum:({format_tuple(tuple(self.u))},{format_tuple(tuple(self.v))})"

    def __repr__(self):
        return f"KummerPair{self.encode()[4:]}"


def decode_pair(field, text):
    """Parse ``kum:((u0:u1),(v0:v1))``."""
    tag, _, body = text.strip().partition(":")
    if tag != "kum" or not (body.startswith("((") and body.endswith("))")):
        raise EncodingError(f"expected a 'kum:((u0:u1),(v0:v1))' encoding, got {text!r}")
    left, sep, right = body[1:-1].partition("),(")
    if not sep:
        raise EncodingError(f"malformed pair {text!r}")
    u = P1Point(*parse_tuple(field, left + ")", 2))
    v = P1Point(*parse_tuple(field, "(" + right, 2))
    return KummerPair(u, v)


class OrientedKummerCurve:
    """The image of Q -> (line(Q), line(Q - P)) for a fixed base point P."""

    def __init__(self, base):
        curve = base.curve
        self.base = base
        self.curve = curve
        if isinstance(base, Z4Point):
            self.model = "z4"
            self.e = curve.e
        elif isinstance(base, Mu4Point):
            self.model = curve.TAG
            self.split = curve if isinstance(curve, Mu4Curve) else curve.split_partner()
            self.e = self.split.c2
        else:
            raise TypeError("base point must lie on a Z/4Z or mu4 curve")
        if base == curve.O or base == curve.T2:
            raise UnsupportedBaseError("the base point must not be 2-torsion")
        self.field = curve.field
        with unmetered():
            t = self._line(base)
            if t.u0:
                self.t0, self.t1 = self.field.one, t.u1 / t.u0
            else:
                self.t0, self.t1 = self.field.zero, self.field.one
            if self.model == "mu4ns":
                self._split_base = curve.to_split(base, self.split)
            elif self.model == "mu4":
                self._split_base = base

    def __repr__(self):
        return f"OrientedKummerCurve(base={self.base.encode()}, t=({self.t0.hex()}:{self.t1.hex()}))"

    def _line(self, Q):
        """Projection to the Kummer line; for mu4 curves (cX0 : X1+X3) or (X1+X3 : cX2)."""
        if self.model == "z4":
            return self.curve.pi1(Q)
        S = Q if self.model == "mu4" else self.curve.to_split(Q, self.split)
        return self.split.pi1(S)

    def base_line(self):
        return P1Point(self.t0, self.t1)

    def contains(self, pair):
        (U0, U1), (V0, V1) = pair
        with unmetered():
            A = U0 * V0 + U1 * V1
            B = U0 * V1 + U1 * V0
            lhs = self.t0.square() * B.square() + self.t1.square() * A.square()
            return lhs == self.e * self.t0 * self.t1 * U0 * U1 * V0 * V1

    def pair(self, u, v):
        """Validated pair from two P1 points (or coordinate tuples)."""
        u = u if isinstance(u, P1Point) else P1Point(*(self.field(x) for x in u))
        v = v if isinstance(v, P1Point) else P1Point(*(self.field(x) for x in v))
        p = KummerPair(u, v)
        self._check_pair(p)
        return p

    def _check_pair(self, pair):
        if not isinstance(pair, KummerPair):
            raise TypeError("expected a KummerPair")
        for x in (*pair.u, *pair.v):
            self.field.check(x)
        if not self.contains(pair):
            raise NotOnCurveError(f"{pair!r} is not on {self!r}")

    def _check_point(self, Q):
        if Q.curve != self.curve:
            raise ContextMismatchError("point does not lie on the base point's curve")

    # -- the identification and its inverse -------------------------------------

    def lift(self, Q):
        """Q -> (line(Q), line(Q - P))."""
        self._check_point(Q)
        if self.model == "z4":
            return kappa(self, Q)
        S = Q if self.model == "mu4" else self.curve.to_split(Q, self.split)
        return lambda_map(self, S)

    def recover(self, pair):
        """The unique point Q with (line(Q), line(Q - P)) = pair."""
        if self.model == "z4":
            return kappa_inv(self, pair)
        S = lambda_inv(self, pair)
        return S if self.model == "mu4" else self.split.to_nonsplit(S, self.curve)

    # -- Montgomery step and ladder -------------------------------------------

    def _phi(self, pair, variant):
        """(line(Q), line(R)) -> (line(2Q), line(Q + R)) for Q - R = +-P."""
        (U0, U1), (V0, V1) = pair
        e, t0, t1 = self.e, self.t0, self.t1
        S0, S1 = U0.square(), U1.square()
        u = ((S0 + S1).square(), e.mul(S0 * S1, "m_c"))
        if variant == "S5":
            # (t1 A^2 : t0 B^2) with A = U0V0 + U1V1, B = U0V1 + U1V0 via Karatsuba
            a, b = U0 * V0, U1 * V1
            B = (U0 + U1) * (V0 + V1) + a + b
            A2, B2 = (a + b).square(), B.square()
            v = (t1.mul(A2, "m_t"), B2) if t0 == 1 else (A2, t0.mul(B2, "m_t"))
        elif variant == "S4":
            # trade one squaring for one m_c using the curve equation
            if t0 == 1:
                a, b = U0 * V0, U1 * V1
                A2 = (a + b).square()
                v = (A2, t1.mul(A2, "m_t") + e.mul(a * b, "m_c"))
            else:
                a, b = U0 * V1, U1 * V0
                B2 = (a + b).square()
                v = (t0.mul(B2, "m_t") + e.mul(a * b, "m_c"), B2)
        else:
            raise ValueError(f"unknown step variant {variant!r}; expected one of {VARIANTS}")
        if not any(v):
            raise ArithmeticError("pseudo-addition vanished; pair is not on this curve")
        return KummerPair(P1Point(*u), P1Point(*v))

    def step(self, pair, bit=1, variant="S4"):
        """Bit 1: (Q, R) -> (2Q, Q + R).  Bit 0: (Q, R) -> (Q + R, 2R), the swapped map."""
        if bit:
            return self._phi(pair, variant)
        return self._phi(pair.swap(), variant).swap()

    def initial_pair(self):
        """(line(P), line(O))."""
        F = self.field
        return KummerPair(P1Point(self.t0, self.t1), P1Point(F.one, F.zero))

    def ladder(self, n, variant="S4", trace=None):
        """(line((n+1)P), line(nP)), scanning every bit of n from the top.

        If ``trace`` is a list, one (bit, OpMeter) entry per step is appended.
        """
        if n < 0:
            raise ValueError("the ladder takes a nonnegative scalar")
        pair = self.initial_pair()
        outer = active_meter()
        for ch in bin(n)[2:] if n else "":
            bit = ch == "1"
            if trace is None:
                pair = self.step(pair, bit, variant)
                continue
            with OpMeter() as m:
                pair = self.step(pair, bit, variant)
            trace.append((int(bit), m))
            if outer is not None:
                outer.merge(m)
        return pair

    def smul(self, n, variant="S4"):
        """[n]P: ladder, recover (n+1)P, then add -P."""
        if n < 0:
            return self.curve.neg(self.smul(-n, variant))
        if n == 0:
            return self.curve.O
        R = self.recover(self.ladder(n, variant))
        return self.curve.add(R, self.curve.neg(self.base))


# -- explicit maps ------------------------------------------------------------

def kappa(K, Q):
    """Z/4Z form: (pi1(Q), line(Q - P)) with the second factor bilinear in P and Q."""
    t0, t1, t2, t3 = K.base
    X0, X1, X2, X3 = Q
    v = (t0 * X0 + t2 * X2, t3 * X1 + t1 * X3)
    if not any(v):
        v = (t1 * X1 + t3 * X3, t2 * X0 + t0 * X2)
    return KummerPair(K.curve.pi1(Q), P1Point(*v))


def kappa_inv(K, pair):
    """Z/4Z form: pi2(Q) from the pair, then the skew-Segre map with pi1(Q) = u."""
    K._check_pair(pair)
    t0, t1, t2, t3 = K.base
    (U0, U1), (V0, V1) = pair
    a, b, c, d = U0 * V0, U1 * V1, U0 * V1, U1 * V0
    w = (t1 * a + t2 * b, t0 * c + t3 * d)
    if not any(w):
        w = (t3 * c + t0 * d, t2 * a + t1 * b)
    return K.curve.segre(pair.u, P1Point(*w), check=False)


def lambda_map(K, Q):
    """Split mu4 form: ((cX0 : X1+X3) or (X1+X3 : cX2), line(Q - S))."""
    s0, s1, s2, s3 = K._split_base
    X0, X1, X2, X3 = Q
    v = (s0 * X0 + s2 * X2, s3 * X1 + s1 * X3)
    if not any(v):
        v = (s1 * X1 + s3 * X3, s2 * X0 + s0 * X2)
    return KummerPair(K.split.pi1(Q), P1Point(*v))


def lambda_inv(K, pair):
    """Split mu4 form: the first nonzero of two cubic quadruples."""
    K._check_pair(pair)
    s0, s1, s2, s3 = K._split_base
    c = K.split.c
    (U0, U1), (V0, V1) = pair
    s13 = s1 + s3
    u00, u11, u01 = U0.square(), U1.square(), U0 * U1
    h = (s0 * u00 + s2 * u11) * V1
    out = (s13 * u00 * V0, h + c * s1 * u01 * V0, s13 * u11 * V0, h + c * s3 * u01 * V0)
    if not any(out):
        h = (s2 * u00 + s0 * u11) * V0
        out = (s13 * u00 * V1, h + c * s3 * u01 * V1, s13 * u11 * V1, h + c * s1 * u01 * V1)
    return K.split._pt(out)


# -- functional surface ---------------------------------------------------------

def oriented_curve(P):
    return OrientedKummerCurve(P)


def montgomery_step(K, pair, bit=1, variant="S4"):
    return K.step(pair, bit, variant)


def ladder(n, P, variant="S4", trace=None):
    return OrientedKummerCurve(P).ladder(n, variant, trace)


def smul_recover(n, P, variant="S4"):
    return OrientedKummerCurve(P).smul(n, variant)
