"""Curves in split and non-split mu4-normal form over GF(2^m).

Split form C_c : X0^2 + X2^2 = c^2 X1 X3,  X1^2 + X3^2 = c^2 X0 X2,
identity (c:1:0:1), 4-torsion point T = (1:c:1:0) acting by cyclic shift.

Non-split form with s = c^-4 : (X0 + X2)^2 = X1 X3,  s (X1 + X3)^2 = X0 X2,
identity (1:1:0:1).  It is reached from the split form by scaling X0 and X2
by c^-1, which trades the constant multiplications of the split formulas for
fewer multiplications by s.

The map ``iota`` identifies C_c with the Z/4Z-normal form E_{c^2}.
"""

from __future__ import annotations

from .binfield import FieldElement, fe_root, unmetered
from .errors import (
    ContextMismatchError,
    EncodingError,
    ExceptionalInputError,
    NotOnCurveError,
    SingularCurveError,
    SupersingularError,
)
from .projective import P1Point, ProjectivePoint, parse_tuple
from .wsref import INFINITY, WeierstrassPoint, mu4_ws_curve
from .z4form import Z4Curve, Z4Point, eval_law

# Projection laws for pi1(P+Q) and pi2(P+Q) on the split form, as bilinear
# tables in the same layout as the Z/4Z ones.
MU4_PI1_LAWS = (
    (((0, 0), (2, 2)), ((1, 1), (3, 3))),
    (((1, 3), (3, 1)), ((2, 0), (0, 2))),
)
MU4_PI2_LAWS = (
    (((0, 3), (2, 1)), ((1, 0), (3, 2))),
    (((1, 2), (3, 0)), ((0, 1), (2, 3))),
)

# Order in which the complete addition tries the four laws.
COMPLETE_ORDER = (1, 3, 2, 4)


class Mu4Point(ProjectivePoint):
    __slots__ = ()


class _Mu4Base:
    """Shared plumbing for the two variants."""

    def _pt(self, coords):
        return Mu4Point(self, tuple(coords))

    def point(self, *coords):
        """Validated point from four coordinates (FieldElements, ints or hex strings)."""
        if len(coords) == 1:
            coords = tuple(coords[0])
        coords = tuple(self.field(x) for x in coords)
        if len(coords) != 4:
            raise ValueError("a mu4 point has four coordinates")
        if not self.contains(coords):
            raise NotOnCurveError(f"{coords} is not on {self!r}")
        return self._pt(coords)

    def decode(self, text):
        tag, _, body = text.partition(":")
        if tag != self.TAG:
            raise EncodingError(f"expected a '{self.TAG}:' encoding, got {text!r}")
        return self.point(*parse_tuple(self.field, body, 4))

    def _check(self, *points):
        for P in points:
            if not isinstance(P, Mu4Point) or P.curve != self:
                raise ContextMismatchError("point does not belong to this curve")

    def torsion(self):
        """O, T, 2T, 3T."""
        return [self.O, self.T, self.T2, self.T3]

    def smul(self, n, P):
        """[n]P by double-and-add on the quartic model."""
        self._check(P)
        if n < 0:
            return self.smul(-n, self.neg(P))
        R = self.O
        for bit in bin(n)[2:] if n else "":
            R = self.double(R)
            if bit == "1":
                R = self.add(R, P)
        return R

    def weierstrass(self):
        """The Weierstrass partner y^2 + xy = x^3 + c^-4 x."""
        return mu4_ws_curve(self.c)

    def j_invariant(self):
        return self.c.square().square().square()

    def points(self):
        """Every rational point (small fields only), identity first."""
        return [self.from_ws(W) for W in self.weierstrass().points()]

    def random_point(self, seed=0, rng=None):
        return self.from_ws(self.weierstrass().random_point(seed, rng))


class Mu4Curve(_Mu4Base):
    """Split mu4-normal form C_c, c nonzero."""

    TAG = "mu4"
    variant = "split"

    def __init__(self, c):
        if not isinstance(c, FieldElement):
            raise TypeError("curve parameter must be a FieldElement")
        if not c:
            raise SingularCurveError("c = 0 gives a singular mu4-normal form")
        self.field = c.field
        self.c = c
        with unmetered():
            self.c2 = c.square()
            self.c4 = self.c2.square()
            self.c5 = self.c4 * c
        one, zero = self.field.one, self.field.zero
        self.O = self._pt((c, one, zero, one))
        self.T = self._pt((one, c, one, zero))
        self.T2 = self._pt((zero, one, c, one))
        self.T3 = self._pt((one, zero, one, c))

    def __eq__(self, other):
        return isinstance(other, Mu4Curve) and self.c == other.c

    def __hash__(self):
        return hash(("mu4", self.field, self.c.value))

    def __repr__(self):
        return f"Mu4Curve(c={self.c.hex()}, field={self.field.label()})"

    def param(self):
        return self.c

    def contains(self, coords):
        X0, X1, X2, X3 = coords
        if not any(coords):
            return False
        with unmetered():
            return ((X0 + X2).square() == self.c2 * X1 * X3
                    and (X1 + X3).square() == self.c2 * X0 * X2)

    # -- permutations ---------------------------------------------------------

    def neg(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        return self._pt((X0, X3, X2, X1))

    def translate_T(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        return self._pt((X3, X0, X1, X2))

    # -- addition -------------------------------------------------------------

    def addition_law(self, P, Q, i):
        """Evaluate law ``i`` (1..4) of the bidegree-(2,2) basis; may be all zero."""
        X0, X1, X2, X3 = P
        Y0, Y1, Y2, Y3 = Q
        c = self.c
        if i == 1:
            return ((X0 * Y0 + X2 * Y2).square(),
                    c.mul(X0 * X1 * Y0 * Y1 + X2 * X3 * Y2 * Y3, "m_c"),
                    (X1 * Y1 + X3 * Y3).square(),
                    c.mul(X0 * X3 * Y0 * Y3 + X1 * X2 * Y1 * Y2, "m_c"))
        if i == 2:
            return (c.mul(X0 * X1 * Y0 * Y3 + X2 * X3 * Y1 * Y2, "m_c"),
                    (X1 * Y0 + X3 * Y2).square(),
                    c.mul(X0 * X3 * Y2 * Y3 + X1 * X2 * Y0 * Y1, "m_c"),
                    (X0 * Y3 + X2 * Y1).square())
        if i == 3:
            return ((X3 * Y1 + X1 * Y3).square(),
                    c.mul(X0 * X3 * Y1 * Y2 + X1 * X2 * Y0 * Y3, "m_c"),
                    (X0 * Y2 + X2 * Y0).square(),
                    c.mul(X0 * X1 * Y2 * Y3 + X2 * X3 * Y0 * Y1, "m_c"))
        if i == 4:
            return (c.mul(X0 * X3 * Y0 * Y1 + X1 * X2 * Y2 * Y3, "m_c"),
                    (X0 * Y1 + X2 * Y3).square(),
                    c.mul(X0 * X1 * Y1 * Y2 + X2 * X3 * Y0 * Y3, "m_c"),
                    (X1 * Y2 + X3 * Y0).square())
        raise ValueError("addition laws are numbered 1 to 4")

    def add_fast(self, P, Q):
        """Law 1 as a straight-line program: 7M + 2S + 2m_c.

        Raises ExceptionalInputError when P - Q = 2T, where law 1 vanishes.
        """
        self._check(P, Q)
        X0, X1, X2, X3 = P
        Y0, Y1, Y2, Y3 = Q
        Z0, Z1, Z2, Z3 = X0 * Y0, X1 * Y1, X2 * Y2, X3 * Y3
        a, b = Z0 * Z1, Z2 * Z3
        k = (Z0 + Z2) * (Z1 + Z3)  # = Z0Z1 + Z2Z3 + Z0Z3 + Z1Z2
        out = ((Z0 + Z2).square(),
               self.c.mul(a + b, "m_c"),
               (Z1 + Z3).square(),
               self.c.mul(k + a + b, "m_c"))
        if not any(out):
            raise ExceptionalInputError("law 1 vanishes when P - Q = 2T")
        return self._pt(out)

    def add_complete(self, P, Q):
        """P + Q for all inputs, trying laws 1, 3, 2, 4 in turn."""
        self._check(P, Q)
        for i in COMPLETE_ORDER:
            out = self.addition_law(P, Q, i)
            if any(out):
                return self._pt(out)
        raise ArithmeticError("every addition law vanished; inputs are not on one curve")

    def add(self, P, Q):
        try:
            return self.add_fast(P, Q)
        except ExceptionalInputError:
            return self.add_complete(P, Q)

    def double(self, P):
        """[2]P in 2M + 5S + 7m_c, scaled by c^4 so only integral powers of c occur.

        With U = (X0+X2)^2, V = (X1+X3)^2, W = (X0+cX1)^2 the result is
        (c^5 U^2 : c^4 U^2 + V^2 + c^4 F^2 : c^5 V^2 : c^4 U^2 + V^2 + c^4 G^2)
        where G^2 = (U + c^2 V + W) W and F^2 = G^2 + c^2 U V.
        """
        self._check(P)
        X0, X1, X2, X3 = P
        c, c2, c4, c5 = self.c, self.c2, self.c4, self.c5
        U = (X0 + X2).square()
        V = (X1 + X3).square()
        W = (X0 + c.mul(X1, "m_c")).square()            # m_c 1: c X1
        U2, V2 = U.square(), V.square()
        c2V = c2.mul(V, "m_c")                          # m_c 2: c^2 V
        G2 = (U + c2V + W) * W
        c2UV = U * c2V
        c4U2 = c4.mul(U2, "m_c")                        # m_c 3: c^4 U^2
        c4G2 = c4.mul(G2, "m_c")                        # m_c 4: c^4 G^2
        c4F2 = c4G2 + c4.mul(c2UV, "m_c")               # m_c 5: c^4 (c^2 U V)
        base = c4U2 + V2
        return self._pt((c.mul(c4U2, "m_c"),            # m_c 6: c^5 U^2
                         base + c4F2,
                         c5.mul(V2, "m_c"),             # m_c 7: c^5 V^2
                         base + c4G2))

    # -- projections and iota ---------------------------------------------------

    def pi1(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        a = (self.c * X0, X1 + X3)
        return P1Point(*a) if any(a) else P1Point(X1 + X3, self.c * X2)

    def pi2(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        a = (X0 + X2, self.c * X1)
        return P1Point(*a) if any(a) else P1Point(self.c * X3, X0 + X2)

    def proj_add(self, P, Q):
        """(pi1(P+Q), pi2(P+Q)) from the constant-free bilinear laws."""
        self._check(P, Q)
        out = []
        for laws in (MU4_PI1_LAWS, MU4_PI2_LAWS):
            for law in laws:
                u = eval_law(law, P, Q)
                if any(u):
                    out.append(P1Point(*u))
                    break
            else:
                raise ArithmeticError("both projection laws vanished")
        return tuple(out)

    def z4_partner(self):
        """The Z/4Z-normal form E_{c^2} isomorphic to this curve through iota."""
        return Z4Curve(self.c2)

    def iota(self, P, target=None):
        """Isomorphism C_c -> E_{c^2}: skew-Segre map applied to (pi1, pi2)."""
        E = target if target is not None else self.z4_partner()
        return E.segre(self.pi1(P), self.pi2(P), check=False)

    def iota_inv(self, Q):
        """Inverse of iota; uses the first of four quadratic branches that is nonzero."""
        if not isinstance(Q, Z4Point) or Q.curve.e != self.c2:
            raise ContextMismatchError("iota_inv expects a point of E_{c^2}")
        X0, X1, X2, X3 = Q
        c, c2 = self.c, self.c2
        branches = (
            lambda: (X0 * X1 + X2 * X3, c * X2.square(),
                     X0 * X1 + c2 * X1 * X2 + X2 * X3, c * X1.square()),
            lambda: (c * X0 * X3, (X2 + X3).square(), c * X1 * X2, (X0 + X1).square()),
            lambda: ((X0 + X3).square(), c * X2 * X3, (X1 + X2).square(), c * X0 * X1),
            lambda: (c * X3.square(), X0 * X3 + X1 * X2 + c2 * X2 * X3,
                     c * X2.square(), X1 * X2 + X0 * X3),
        )
        for branch in branches:
            out = branch()
            if any(out):
                return self._pt(out)
        raise ArithmeticError("all inverse branches vanished")

    # -- Weierstrass correspondence ---------------------------------------------

    def to_ws(self, P):
        """(c(X1+X3) : X0 + cX1 + X2 : c^4 X2) onto y^2 + xy = x^3 + c^-4 x; O -> infinity."""
        self._check(P)
        X0, X1, X2, X3 = P
        c = self.c
        Z = self.c4 * X2
        if not Z:
            return INFINITY
        iz = Z.inverse()
        return WeierstrassPoint(c * (X1 + X3) * iz, (X0 + c * X1 + X2) * iz)

    def from_ws(self, W):
        """Inverse of :meth:`to_ws`: (x, y) -> (c x^2 : x^2 + y + a : c a : x^2 + y + a + x), a = c^-4."""
        if W.is_infinity:
            return self.O
        x, y = self.field(W.x), self.field(W.y)
        C = self.weierstrass()
        if not C.is_on_curve(WeierstrassPoint(x, y)):
            raise NotOnCurveError(f"{W!r} is not on the partner Weierstrass curve")
        a = C.a4
        x2 = x.square()
        t = x2 + y + a
        return self._pt((self.c * x2, t, self.c * a, t + x))

    # -- non-split partner ------------------------------------------------------

    def nonsplit_partner(self):
        with unmetered():
            s = self.c4.inverse()
        return Mu4NonsplitCurve(s)

    def to_nonsplit(self, P, target=None):
        """(X0 : X1 : X2 : X3) -> (c^-1 X0 : X1 : c^-1 X2 : X3), written without inversion."""
        self._check(P)
        N = target if target is not None else self.nonsplit_partner()
        X0, X1, X2, X3 = P
        c = self.c
        return N._pt((X0, c * X1, X2, c * X3))


class Mu4NonsplitCurve(_Mu4Base):
    """Non-split mu4-normal form with parameter s = c^-4, s nonzero."""

    TAG = "mu4ns"
    variant = "nonsplit"

    def __init__(self, s):
        if not isinstance(s, FieldElement):
            raise TypeError("curve parameter must be a FieldElement")
        if not s:
            raise SingularCurveError("s = 0 gives a singular mu4-normal form")
        self.field = s.field
        self.s = s
        with unmetered():
            # c is the unique fourth root of 1/s in characteristic 2
            self.c = fe_root(s.inverse(), 4)
        one, zero = self.field.one, self.field.zero
        split = Mu4Curve(self.c)
        self.O = self._pt((one, one, zero, one))
        with unmetered():
            self.T, self.T2, self.T3 = (split.to_nonsplit(P, self) for P in split.torsion()[1:])

    def __eq__(self, other):
        return isinstance(other, Mu4NonsplitCurve) and self.s == other.s

    def __hash__(self):
        return hash(("mu4ns", self.field, self.s.value))

    def __repr__(self):
        return f"Mu4NonsplitCurve(s={self.s.hex()}, field={self.field.label()})"

    def param(self):
        return self.s

    def contains(self, coords):
        X0, X1, X2, X3 = coords
        if not any(coords):
            return False
        with unmetered():
            return ((X0 + X2).square() == X1 * X3
                    and self.s * (X1 + X3).square() == X0 * X2)

    def split_partner(self):
        return Mu4Curve(self.c)

    def to_split(self, P, target=None):
        """(X0 : X1 : X2 : X3) -> (c X0 : X1 : c X2 : X3)."""
        self._check(P)
        C = target if target is not None else self.split_partner()
        X0, X1, X2, X3 = P
        return C._pt((self.c * X0, X1, self.c * X2, X3))

    def neg(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        return self._pt((X0, X3, X2, X1))

    def translate_T(self, P):
        """Shift conjugated by the scaling: (c^-1 X3 : c X0 : c^-1 X1 : c X2)."""
        self._check(P)
        X0, X1, X2, X3 = P
        c2 = self.c.square()
        return self._pt((X3, c2 * X0, X1, c2 * X2))

    def addition_law(self, P, Q, i):
        """Law ``i`` (1..4) of the non-split basis; laws 2 and 4 are constant-free."""
        X0, X1, X2, X3 = P
        Y0, Y1, Y2, Y3 = Q
        s = self.s
        if i == 1:
            return ((X0 * Y0 + X2 * Y2).square(),
                    X0 * X1 * Y0 * Y1 + X2 * X3 * Y2 * Y3,
                    s.mul((X1 * Y1 + X3 * Y3).square(), "m_s"),
                    X0 * X3 * Y0 * Y3 + X1 * X2 * Y1 * Y2)
        if i == 2:
            return (X0 * X1 * Y0 * Y3 + X2 * X3 * Y1 * Y2,
                    (X1 * Y0 + X3 * Y2).square(),
                    X0 * X3 * Y2 * Y3 + X1 * X2 * Y0 * Y1,
                    (X0 * Y3 + X2 * Y1).square())
        if i == 3:
            return (s.mul((X1 * Y3 + X3 * Y1).square(), "m_s"),
                    X0 * X3 * Y1 * Y2 + X1 * X2 * Y0 * Y3,
                    (X0 * Y2 + X2 * Y0).square(),
                    X0 * X1 * Y2 * Y3 + X2 * X3 * Y0 * Y1)
        if i == 4:
            return (X0 * X3 * Y0 * Y1 + X1 * X2 * Y2 * Y3,
                    (X0 * Y1 + X2 * Y3).square(),
                    X0 * X1 * Y1 * Y2 + X2 * X3 * Y0 * Y3,
                    (X1 * Y2 + X3 * Y0).square())
        raise ValueError("addition laws are numbered 1 to 4")

    @staticmethod
    def _law_program(Z0, Z1, Z2, Z3):
        # (Z0Z3 + Z1Z2, (Z0+Z2)^2, Z0Z1 + Z2Z3, (Z1+Z3)^2) in 3M + 2S
        a, b = Z0 * Z1, Z2 * Z3
        k = (Z0 + Z2) * (Z1 + Z3)  # = Z0Z1 + Z2Z3 + Z0Z3 + Z1Z2
        return (k + a + b, (Z0 + Z2).square(), a + b, (Z1 + Z3).square())

    def add(self, P, Q):
        """P + Q in 7M + 2S via law 4; law 2 covers the inputs where law 4 vanishes."""
        self._check(P, Q)
        X0, X1, X2, X3 = P
        Y0, Y1, Y2, Y3 = Q
        out = self._law_program(X0 * Y1, X1 * Y2, X2 * Y3, X3 * Y0)
        if any(out):
            return self._pt(out)
        # law 2 is the same program on Z = (X0Y3, X1Y0, X2Y1, X3Y2), rotated
        r = self._law_program(X0 * Y3, X1 * Y0, X2 * Y1, X3 * Y2)
        out = (r[2], r[3], r[0], r[1])
        if any(out):
            return self._pt(out)
        raise ArithmeticError("laws 2 and 4 both vanished; inputs are not on one curve")

    add_complete = add

    def double(self, P):
        """[2]P in 2M + 5S + 2m_s.

        With U = (X0+X2)^2, V = (X1+X3)^2 the result is
        (U^2 : U^2 + s^2 V^2 + F'^2 : s V^2 : U^2 + s^2 V^2 + G'^2), where
        G' = (X0+X1)(X2+X3) and F' + G' = (X0+X2)(X1+X3), so F'^2 = G'^2 + UV.
        """
        self._check(P)
        X0, X1, X2, X3 = P
        U = (X0 + X2).square()
        V = (X1 + X3).square()
        U2, V2 = U.square(), V.square()
        sV2 = self.s.mul(V2, "m_s")
        base = U2 + self.s.mul(sV2, "m_s")
        G2 = ((X0 + X1) * (X2 + X3)).square()
        F2 = G2 + U * V
        return self._pt((U2, base + F2, sV2, base + G2))

    def to_ws(self, P):
        return Mu4Curve(self.c).to_ws(self.to_split(P))

    def from_ws(self, W):
        C = Mu4Curve(self.c)
        return C.to_nonsplit(C.from_ws(W), self)


def mu4_new_split(c):
    return Mu4Curve(c)


def mu4_new_nonsplit(s):
    return Mu4NonsplitCurve(s)


def curve_from_j(j):
    """(E_{c^2}, C_c) with c = j^(1/8), the unique eighth root."""
    if not j:
        raise SupersingularError("j = 0 is supersingular; no normal form has this invariant")
    c = fe_root(fe_root(fe_root(j, 2), 2), 2)
    C = Mu4Curve(c)
    return C.z4_partner(), C
