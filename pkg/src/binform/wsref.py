"""Long Weierstrass curves over GF(2^m) with the affine chord-tangent law.

This is the reference the normal-form code is checked against, so it is
deliberately naive: affine coordinates, one inversion per group operation,
no shared code with the projective formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binfield import FieldElement, unmetered
from .errors import ContextMismatchError, NotOnCurveError, SingularCurveError
from .rng import SplitMix64


@dataclass(frozen=True)
class WeierstrassPoint:
    """Affine point, or the point at infinity when ``x`` is None."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    @property
    def is_infinity(self):
        return self.x is None

    def encode(self):
        if self.is_infinity:
            return "ws:infinity"
        return f"ws:({self.x.hex()},{self.y.hex()})"

    def __repr__(self):
        return "WeierstrassPoint(infinity)" if self.is_infinity else f"WeierstrassPoint({self.x}, {self.y})"


INFINITY = WeierstrassPoint()


class WeierstrassCurve:
    """Y^2 Z + (a1 X + a3 Z) Y Z = X^3 + a2 X^2 Z + a4 X Z^2 + a6 Z^3."""

    def __init__(self, a1, a2, a3, a4, a6):
        field = a1.field
        for a in (a2, a3, a4, a6):
            field.check(a)
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        if not self.discriminant():
            raise SingularCurveError("Weierstrass model has zero discriminant")

    # The b-invariants below are the general formulas with integer
    # coefficients reduced mod 2.
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1.square()
        b4 = a1 * a3
        b6 = a3.square()
        b8 = a1.square() * a6 + a1 * a3 * a4 + a2 * a3.square() + a4.square()
        return b2, b4, b6, b8

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return b2.square() * b8 + b6.square() + b2 * b4 * b6

    def j_invariant(self):
        b2 = self.b_invariants()[0]
        c4 = b2.square()
        return c4 * c4.square() / self.discriminant()

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(tuple(a.value for a in self.coefficients()))

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __repr__(self):
        return "WeierstrassCurve(" + ", ".join(a.hex() for a in self.coefficients()) + ")"

    def is_on_curve(self, P):
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        with unmetered():
            lhs = y.square() + (self.a1 * x + self.a3) * y
            rhs = x.square() * x + self.a2 * x.square() + self.a4 * x + self.a6
            return lhs == rhs

    def point(self, x=None, y=None):
        if x is None:
            return INFINITY
        P = WeierstrassPoint(self.field(x), self.field(y))
        if not self.is_on_curve(P):
            raise NotOnCurveError(f"{P!r} is not on {self!r}")
        return P

    def _check(self, *points):
        for P in points:
            if P.is_infinity:
                continue
            if P.x.field != self.field:
                raise ContextMismatchError("point belongs to a different field")
            if not self.is_on_curve(P):
                raise NotOnCurveError(f"{P!r} is not on {self!r}")

    def neg(self, P):
        if P.is_infinity:
            return P
        return WeierstrassPoint(P.x, P.y + self.a1 * P.x + self.a3)

    def add(self, P, Q):
        self._check(P, Q)
        return self._add(P, Q)

    def _add(self, P, Q):
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4 = self.a1, self.a2, self.a3, self.a4
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if y2 == y1 + a1 * x1 + a3:
                return INFINITY
            # tangent: (3x^2 + 2a2 x + a4 - a1 y) / (2y + a1 x + a3), char 2
            lam = (x1.square() + a4 + a1 * y1) / (a1 * x1 + a3)
        else:
            lam = (y2 + y1) / (x2 + x1)
        x3 = lam.square() + a1 * lam + a2 + x1 + x2
        y3 = (lam + a1) * x3 + (y1 + lam * x1) + a3
        return WeierstrassPoint(x3, y3)

    def double(self, P):
        return self.add(P, P)

    def smul(self, n, P):
        """[n]P by left-to-right double-and-add."""
        if n < 0:
            return self.smul(-n, self.neg(P))
        self._check(P)
        R = INFINITY
        for bit in bin(n)[2:] if n else "":
            R = self._add(R, R)
            if bit == "1":
                R = self._add(R, P)
        return R

    def _lift_x(self, x):
        """The y values above x (0, 1 or 2 of them)."""
        h = self.a1 * x + self.a3
        rhs = x.square() * x + self.a2 * x.square() + self.a4 * x + self.a6
        if not h:
            return [rhs.sqrt()]
        z = self.field.solve_quadratic(rhs / h.square())
        if z is None:
            return []
        return [h * z, h * (z + 1)]

    def random_point(self, seed=0, rng=None):
        """Deterministic pseudo-random affine point drawn from SplitMix64(seed)."""
        rng = rng if rng is not None else SplitMix64(seed)
        while True:
            x = self.field.random(rng)
            ys = self._lift_x(x)
            if ys:
                y = ys[rng.getrandbits(1)] if len(ys) == 2 else ys[0]
                return WeierstrassPoint(x, y)

    def points(self):
        """All rational points, infinity first.  Only sensible for small fields."""
        out = [INFINITY]
        for x in self.field.elements():
            out.extend(WeierstrassPoint(x, y) for y in self._lift_x(x))
        return out

    def order_of(self, P, bound=None):
        """Order of P by repeated addition (small fields)."""
        bound = bound or 2 * self.field.order + 2
        R, n = P, 1
        while not R.is_infinity:
            R = self._add(R, P)
            n += 1
            if n > bound:
                raise RuntimeError("order exceeds Hasse bound; curve data inconsistent")
        return n


def z4_ws_curve(e):
    """Y(Y + X)Z = X(X + e^-1 Z)^2, i.e. a1 = 1, a4 = e^-2: the Z/4Z-form partner."""
    F = e.field
    return WeierstrassCurve(F.one, F.zero, F.zero, e.inverse().square(), F.zero)


def mu4_ws_curve(c):
    """Y(Y + X)Z = X(X + c^-2 Z)^2, i.e. a1 = 1, a4 = c^-4: the mu4-form partner."""
    F = c.field
    return WeierstrassCurve(F.one, F.zero, F.zero, c.inverse().square().square(), F.zero)
