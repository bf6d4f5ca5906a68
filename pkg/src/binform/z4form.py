"""Curves in Z/4Z-normal form over GF(2^m).

E_e : (X0 + X1 + X2 + X3)^2 = e X0 X2 = e X1 X3, identity O = (1:0:0:1).

The rational point T = (1:1:0:0) has order 4 and acts by the cyclic shift
of coordinates.  Two projections to P^1 split E into the skew-Segre quadric
X0 X2 = X1 X3, and addition is done one projection at a time with two
bilinear laws each, then recombined through the skew-Segre map.

>>> from binform.binfield import Field
>>> E = Z4Curve(Field(5)(2))
>>> E.add(E.T, E.T) == E.T2
True
"""

from __future__ import annotations

from .binfield import FieldElement, unmetered
from .errors import ContextMismatchError, EncodingError, NotOnCurveError, SingularCurveError
from .projective import P1Point, ProjectivePoint, parse_tuple
from .wsref import INFINITY, WeierstrassPoint, z4_ws_curve

# Addition-law projections: each law is a pair of output coordinates, each a
# sum of two products X[i] * Y[j].  The tables hold no curve constant, so the
# same laws serve every curve in the family.
PI1_LAWS = (
    (((0, 3), (2, 1)), ((1, 0), (3, 2))),
    (((1, 2), (3, 0)), ((0, 1), (2, 3))),
)
PI2_LAWS = (
    (((0, 0), (2, 2)), ((1, 1), (3, 3))),
    (((1, 3), (3, 1)), ((0, 2), (2, 0))),
)


def eval_law(law, X, Y):
    """Evaluate one bilinear law; 4M."""
    return tuple(X[a] * Y[b] + X[c] * Y[d] for (a, b), (c, d) in law)


class Z4Point(ProjectivePoint):
    __slots__ = ()


class Z4Curve:
    """E_e in Z/4Z-normal form; ``e`` must be nonzero."""

    TAG = "z4"

    def __init__(self, e):
        if not isinstance(e, FieldElement):
            raise TypeError("curve parameter must be a FieldElement")
        if not e:
            raise SingularCurveError("e = 0 gives a singular Z/4Z-normal form")
        self.field = e.field
        self.e = e
        F = self.field
        one, zero = F.one, F.zero
        self.O = self._pt((one, zero, zero, one))
        self.T = self._pt((one, one, zero, zero))
        self.T2 = self._pt((zero, one, one, zero))
        self.T3 = self._pt((zero, zero, one, one))

    def __eq__(self, other):
        return isinstance(other, Z4Curve) and self.e == other.e

    def __hash__(self):
        return hash(("z4", self.field, self.e.value))

    def __repr__(self):
        return f"Z4Curve(e={self.e.hex()}, field={self.field.label()})"

    def param(self):
        return self.e

    def torsion(self):
        """The subgroup generated by T, in the order O, T, 2T, 3T."""
        return [self.O, self.T, self.T2, self.T3]

    def j_invariant(self):
        return self.e.square().square()

    def weierstrass(self):
        """The Weierstrass partner y^2 + xy = x^3 + e^-2 x."""
        return z4_ws_curve(self.e)

    # -- points -------------------------------------------------------------

    def _pt(self, coords):
        return Z4Point(self, tuple(coords))

    def contains(self, coords):
        X0, X1, X2, X3 = coords
        if not any(coords):
            return False
        with unmetered():
            p02 = X0 * X2
            return (X0 + X1 + X2 + X3).square() == self.e * p02 and p02 == X1 * X3

    def point(self, *coords):
        """Validated point from four coordinates (FieldElements, ints or hex strings)."""
        if len(coords) == 1:
            coords = tuple(coords[0])
        coords = tuple(self.field(x) for x in coords)
        if len(coords) != 4:
            raise ValueError("a Z/4Z point has four coordinates")
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
            if not isinstance(P, Z4Point) or P.curve != self:
                raise ContextMismatchError("point does not belong to this curve")

    # -- permutations -------------------------------------------------------

    def neg(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        return self._pt((X3, X2, X1, X0))

    def translate_T(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        return self._pt((X3, X0, X1, X2))

    # -- projections and the skew-Segre map ----------------------------------

    def pi1(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        if X0 or X1:
            return P1Point(X0, X1)
        return P1Point(X3, X2)

    def pi2(self, P):
        self._check(P)
        X0, X1, X2, X3 = P
        if X0 or X3:
            return P1Point(X0, X3)
        return P1Point(X1, X2)

    def on_segre_image(self, u, v):
        U0, U1 = u
        V0, V1 = v
        with unmetered():
            return (U0 + U1).square() * (V0 + V1).square() == self.e * U0 * U1 * V0 * V1

    def segre(self, u, v, check=True):
        """((U0:U1),(V0:V1)) -> (U0V0 : U1V0 : U1V1 : U0V1); 4M."""
        if check and not self.on_segre_image(u, v):
            raise NotOnCurveError("pair does not lie on the image of the curve in P^1 x P^1")
        U0, U1 = u
        V0, V1 = v
        return self._pt((U0 * V0, U1 * V0, U1 * V1, U0 * V1))

    # -- group law ------------------------------------------------------------

    @staticmethod
    def _first_nonzero(laws, X, Y):
        for law in laws:
            out = eval_law(law, X, Y)
            if any(out):
                return out
        raise ArithmeticError("every addition law vanished; inputs are not on one curve")

    def add_projections(self, P, Q):
        """(pi1(P+Q), pi2(P+Q)) from the bilinear laws."""
        self._check(P, Q)
        return (P1Point(*self._first_nonzero(PI1_LAWS, P, Q)),
                P1Point(*self._first_nonzero(PI2_LAWS, P, Q)))

    def add(self, P, Q):
        """P + Q; 12M for generic inputs."""
        u, v = self.add_projections(P, Q)
        return self.segre(u, v, check=False)

    def double(self, P):
        """[2]P in 7M + 2S."""
        self._check(P)
        X0, X1, X2, X3 = P
        s02, s13 = X0 + X2, X1 + X3
        a, b = X0 * X1, X2 * X3
        k = s02 * s13  # = X0X1 + X2X3 + X0X3 + X1X2
        u = (k + a + b, a + b)
        v = (s02.square(), s13.square())
        if not any(u) or not any(v):
            return self.add(P, P)
        return self.segre(u, v, check=False)

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

    # -- Weierstrass correspondence --------------------------------------------

    def linear_ws_map(self, P):
        """The raw linear map (X1+X2 : X2 : e(X0+X3)), as a coordinate triple.

        It vanishes at O and sends 2T to the Weierstrass point at infinity, so
        on its own it does not carry O to the identity; :meth:`to_ws` applies
        it to 2T - P instead.
        """
        self._check(P)
        X0, X1, X2, X3 = P
        return (X1 + X2, X2, self.e * (X0 + X3))

    def to_ws(self, P):
        """Group isomorphism onto y^2 + xy = x^3 + e^-2 x with O -> infinity.

        This is the raw map evaluated at 2T - P = (X1 : X0 : X3 : X2), i.e.
        (X : Y : Z) = (X0 + X3 : X3 : e(X1 + X2)).  At 2T all three vanish and
        the image is (0, 0).  With this choice T goes to (1 : 0 : e) and the
        map agrees with the mu4 one through iota.
        """
        self._check(P)
        X0, X1, X2, X3 = P
        X, Y, Z = X0 + X3, X3, self.e * (X1 + X2)
        if not Z:
            if not (X or Y):
                zero = self.field.zero
                return WeierstrassPoint(zero, zero)
            return INFINITY
        iz = Z.inverse()
        return WeierstrassPoint(X * iz, Y * iz)

    def from_ws(self, W):
        """Inverse of :meth:`to_ws`: (x, y) -> (ex(x + y) : x + y : y : exy), (0, 0) -> 2T."""
        if W.is_infinity:
            return self.O
        x, y = self.field(W.x), self.field(W.y)
        if not self.weierstrass().is_on_curve(WeierstrassPoint(x, y)):
            raise NotOnCurveError(f"{W!r} is not on the partner Weierstrass curve")
        if not x:
            return self.T2
        ex = self.e * x
        return self._pt((ex * (x + y), x + y, y, ex * y))

    def points(self):
        """Every rational point (small fields only), identity first."""
        return [self.from_ws(W) for W in self.weierstrass().points()]

    def random_point(self, seed=0, rng=None):
        return self.from_ws(self.weierstrass().random_point(seed, rng))


def z4_new(e):
    return Z4Curve(e)
