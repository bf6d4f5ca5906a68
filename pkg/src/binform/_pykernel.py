"""Pure-Python GF(2^m) kernel.

Carry-less products are computed with ordinary integer multiplication on
"spread" operands: every coefficient is moved into its own byte-aligned slot
that is wide enough to hold the column count, so the low bit of each slot of
the integer product is the XOR of the column.  Spreading and compaction go
through ``bytes`` slicing and ``translate``, which keeps the per-call work in C.
"""

_TO_01 = bytes.maketrans(b"01", b"\x00\x01")
_LOW_BIT_ASCII = bytes(0x30 | (i & 1) for i in range(256))

NAME = "python"


def _slot_bytes(nbits):
    w = 1
    while (1 << (8 * w)) <= nbits:
        w += 1
    return w


def clmul(a, b):
    """Carry-less product of two nonnegative integers."""
    if not a or not b:
        return 0
    if a < b:
        a, b = b, a
    if b < 16:
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        return r
    sa = format(a, "b").encode().translate(_TO_01)
    sb = format(b, "b").encode().translate(_TO_01)
    w = _slot_bytes(len(sb))
    if w == 1:
        ia = int.from_bytes(sa, "big")
        ib = int.from_bytes(sb, "big")
    else:
        buf = bytearray(w * len(sa))
        buf[w - 1::w] = sa
        ia = int.from_bytes(buf, "big")
        buf = bytearray(w * len(sb))
        buf[w - 1::w] = sb
        ib = int.from_bytes(buf, "big")
    nslots = len(sa) + len(sb) - 1
    low = (ia * ib).to_bytes(w * nslots, "big")[w - 1::w]
    return int(low.translate(_LOW_BIT_ASCII), 2)


def clsqr(a):
    """Carry-less square: interleave a zero bit after every coefficient."""
    if not a:
        return 0
    bits = format(a, "b").encode()
    buf = bytearray(b"0" * (2 * len(bits) - 1))
    buf[::2] = bits
    return int(buf, 2)


def poly_divmod(a, b):
    """Quotient and remainder of GF(2)[x] division."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a


class Kernel:
    """Reduction modulo a fixed polynomial of degree ``m`` (need not be irreducible)."""

    __slots__ = ("modulus", "m", "mask", "terms")

    def __init__(self, modulus):
        if modulus < 2:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus
        self.m = modulus.bit_length() - 1
        self.mask = (1 << self.m) - 1
        self.terms = tuple(i for i in range(self.m) if modulus >> i & 1)

    def reduce(self, p):
        m, mask, terms = self.m, self.mask, self.terms
        while p >> m:
            hi = p >> m
            p &= mask
            for t in terms:
                p ^= hi << t
        return p

    def mul(self, a, b):
        return self.reduce(clmul(a, b))

    def sqr(self, a):
        return self.reduce(clsqr(a))

    def inv(self, a):
        """Inverse by extended Euclid with degree-aligned shifts."""
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = u.bit_length() - v.bit_length()
            if j < 0:
                u, v = v, u
                g1, g2 = g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
            if not u:
                raise ZeroDivisionError("element not invertible modulo a reducible polynomial")
        return self.reduce(g1)
