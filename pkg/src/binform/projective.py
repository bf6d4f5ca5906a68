"""Projective points shared by the quartic models and the Kummer line.

Coordinates are stored exactly as computed; nothing is scaled until a point
is encoded or compared.  Comparison uses cross products, so it needs no
inversion, and it runs unmetered.
"""

from __future__ import annotations

from .binfield import unmetered
from .errors import ContextMismatchError, EncodingError


def proj_equal(a, b):
    """True if two nonzero coordinate tuples define the same projective point."""
    if len(a) != len(b):
        return False
    with unmetered():
        i = next(k for k, x in enumerate(a) if x)
        if not b[i]:
            return False
        return all(a[i] * y == b[i] * x for x, y in zip(a, b))


def normalize(coords):
    """Scale so the first nonzero coordinate is one."""
    with unmetered():
        lead = next(x for x in coords if x)
        inv = lead.inverse()
        return tuple(x * inv for x in coords)


def format_tuple(coords):
    return "(" + ":".join(x.hex() for x in normalize(coords)) + ")"


def parse_tuple(field, text, n):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise EncodingError(f"expected a parenthesised tuple, got {text!r}")
    parts = text[1:-1].split(":")
    if len(parts) != n:
        raise EncodingError(f"expected {n} coordinates, got {len(parts)}")
    try:
        coords = tuple(field(p.strip()) for p in parts)
    except ValueError as exc:
        raise EncodingError(str(exc)) from None
    if not any(coords):
        raise EncodingError("all coordinates are zero")
    return coords


class P1Point:
    """A point (U0:U1) of the projective line."""

    __slots__ = ("u0", "u1")

    def __init__(self, u0, u1):
        if not (u0 or u1):
            raise ValueError("(0:0) is not a point of P^1")
        self.u0, self.u1 = u0, u1

    def __iter__(self):
        yield self.u0
        yield self.u1

    def __getitem__(self, i):
        return (self.u0, self.u1)[i]

    def __eq__(self, other):
        if not isinstance(other, P1Point):
            return NotImplemented
        return proj_equal(tuple(self), tuple(other))

    def __hash__(self):
        return hash(tuple(x.value for x in normalize(tuple(self))))

    def normalized(self):
        return P1Point(*normalize(tuple(self)))

    def swap(self):
        return P1Point(self.u1, self.u0)

    def encode(self):
        return format_tuple(tuple(self))

    def __repr__(self):
        return f"P1Point{self.encode()}"


class ProjectivePoint:
    """Point of a quartic model in P^3; ``curve`` supplies the group law."""

    __slots__ = ("curve", "coords")

    def __init__(self, curve, coords):
        self.curve = curve
        self.coords = coords

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 4

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.curve == other.curve and proj_equal(self.coords, other.coords)

    def __hash__(self):
        return hash(tuple(x.value for x in normalize(self.coords)))

    def _same_curve(self, other):
        if not isinstance(other, ProjectivePoint) or other.curve != self.curve:
            raise ContextMismatchError("points lie on different curves")

    def __add__(self, other):
        self._same_curve(other)
        return self.curve.add(self, other)

    def __neg__(self):
        return self.curve.neg(self)

    def __sub__(self, other):
        self._same_curve(other)
        return self.curve.add(self, self.curve.neg(other))

    def __rmul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return self.curve.smul(n, self)

    def normalized(self):
        return type(self)(self.curve, normalize(self.coords))

    def encode(self):
        return f"{self.curve.TAG}:{format_tuple(self.coords)}"

    def __repr__(self):
        return f"{type(self).__name__}{format_tuple(self.coords)}"
