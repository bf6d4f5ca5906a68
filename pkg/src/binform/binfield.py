"""Arithmetic in GF(2^m) with a polynomial basis and operation metering.

Elements are immutable and carry their :class:`Field`.  Every arithmetic
operator reports to the :class:`OpMeter` that is active in the current
context (``with OpMeter() as meter: ...``); nothing is counted when no meter
is active.  The cost class of a product is chosen by the caller:

>>> F = Field(3)
>>> with OpMeter() as meter:
...     _ = F(2) * F(4)
...     _ = F(6).square()
...     _ = F(3).mul(F(5), "m_c")
>>> (meter.M, meter.S, meter.m_c)
(1, 1, 1)
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, fields
from functools import lru_cache

from . import _pykernel
from ._kernel import backend_name, make_kernel
from .errors import ContextMismatchError, EncodingError

COUNTERS = ("M", "S", "m_c", "m_t", "m_s", "I", "A")

# Accepted spellings of the multiplication cost classes.
MUL_KINDS = {
    "M": "M",
    "general": "M",
    "m_c": "m_c",
    "curve_const": "m_c",
    "m_t": "m_t",
    "point_const": "m_t",
    "m_s": "m_s",
}

_ACTIVE = contextvars.ContextVar("binform_active_meter", default=None)


@dataclass
class OpMeter:
    """Counters for field operations.

    ``M`` general products, ``S`` squarings, ``m_c`` products by a curve
    constant, ``m_t`` products by a base-point constant, ``m_s`` products by
    the non-split parameter, ``I`` inversions, ``A`` additions.
    """

    M: int = 0
    S: int = 0
    m_c: int = 0
    m_t: int = 0
    m_s: int = 0
    I: int = 0  # noqa: E741
    A: int = 0

    def __post_init__(self):
        self._tokens = []

    def __enter__(self):
        self._tokens.append(_ACTIVE.set(self))
        return self

    def __exit__(self, *exc):
        _ACTIVE.reset(self._tokens.pop())
        return False

    def count(self, kind, n=1):
        setattr(self, kind, getattr(self, kind) + n)

    def reset(self):
        for name in COUNTERS:
            setattr(self, name, 0)

    def counts(self, include_additions=True):
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        if not include_additions:
            del out["A"]
        return out

    def nonzero(self, include_additions=False):
        return {k: v for k, v in self.counts(include_additions).items() if v}

    def __add__(self, other):
        if not isinstance(other, OpMeter):
            return NotImplemented
        return OpMeter(**{k: getattr(self, k) + getattr(other, k) for k in COUNTERS})

    def __sub__(self, other):
        if not isinstance(other, OpMeter):
            return NotImplemented
        return OpMeter(**{k: getattr(self, k) - getattr(other, k) for k in COUNTERS})

    def copy(self):
        return OpMeter(**self.counts())

    def merge(self, other):
        """Add another meter's counts into this one, in place."""
        for k in COUNTERS:
            setattr(self, k, getattr(self, k) + getattr(other, k))
        return self

    def __str__(self):
        parts = [f"{v}{k}" for k, v in self.nonzero().items()]
        return " + ".join(parts) if parts else "0"


def active_meter():
    """The meter receiving counts in the current context, or None."""
    return _ACTIVE.get()


@contextlib.contextmanager
def unmetered():
    """Suspend metering; used by validation, equality tests and oracles."""
    token = _ACTIVE.set(None)
    try:
        yield
    finally:
        _ACTIVE.reset(token)


# -- moduli -------------------------------------------------------------------

def _poly(*exps):
    v = 0
    for e in exps:
        v |= 1 << e
    return v


DEFAULT_MODULI = {
    3: _poly(3, 1, 0),
    5: _poly(5, 2, 0),
    7: _poly(7, 1, 0),
    11: _poly(11, 2, 0),
    17: _poly(17, 3, 0),
    23: _poly(23, 5, 0),
    127: _poly(127, 1, 0),
    163: _poly(163, 7, 6, 3, 0),
    233: _poly(233, 74, 0),
    283: _poly(283, 12, 7, 5, 0),
}


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def poly_gcd(a, b):
    while b:
        a, b = b, _pykernel.poly_divmod(a, b)[1]
    return a


def is_irreducible(f):
    """Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1 for primes p | m."""
    m = f.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if not f & 1:
        return False
    k = _pykernel.Kernel(f)
    x = 2
    wanted = {m // p for p in _prime_factors(m)}
    h, seen = x, {}
    for i in range(1, m + 1):
        h = k.sqr(h)
        if i in wanted:
            seen[i] = h
    if h != x:
        return False
    return all(poly_gcd(seen[i] ^ x, f) == 1 for i in wanted)


@lru_cache(maxsize=None)
def default_modulus(m):
    """Lowest-weight irreducible modulus of degree m (trinomial, else pentanomial)."""
    if m in DEFAULT_MODULI:
        return DEFAULT_MODULI[m]
    if m < 1:
        raise ValueError("extension degree must be positive")
    if m == 1:
        return 0b11
    for k in range(1, m):
        f = _poly(m, k, 0)
        if is_irreducible(f):
            return f
    for k3 in range(3, m):
        for k2 in range(2, k3):
            for k1 in range(1, k2):
                f = _poly(m, k3, k2, k1, 0)
                if is_irreducible(f):
                    return f
    raise ValueError(f"no trinomial or pentanomial of degree {m}")  # pragma: no cover


# -- encoding -----------------------------------------------------------------

def to_hex(v):
    return f"{v:#x}"


def parse_hex(text):
    text = text.strip()
    if not text.startswith("0x"):
        raise EncodingError(f"field element must be written as 0x..., got {text!r}")
    try:
        return int(text, 16)
    except ValueError:
        raise EncodingError(f"bad hex literal {text!r}") from None


# -- field and elements ---------------------------------------------------------

class Field:
    """GF(2^m) = GF(2)[x]/(modulus).  Immutable; safe to share."""

    def __init__(self, m, modulus=None, *, backend=None, check=True):
        if modulus is None:
            modulus = default_modulus(m)
        if modulus.bit_length() - 1 != m:
            raise ValueError(f"modulus {to_hex(modulus)} does not have degree {m}")
        if check and modulus not in DEFAULT_MODULI.values() and not is_irreducible(modulus):
            raise ValueError(f"modulus {to_hex(modulus)} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.kernel = make_kernel(modulus, backend)
        self.backend = backend_name(self.kernel)
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    @classmethod
    def parse(cls, text, **kwargs):
        """Build a field from ``"m"`` or ``"m:0xMODULUS"``."""
        head, _, mod = text.partition(":")
        try:
            m = int(head)
        except ValueError:
            raise EncodingError(f"bad field description {text!r}") from None
        return cls(m, parse_hex(mod) if mod else None, **kwargs)

    def label(self):
        return f"{self.m}:{to_hex(self.modulus)}"

    def __call__(self, value):
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, str):
            value = parse_hex(value)
        if not 0 <= value < self.order:
            raise ValueError(f"{value:#x} is not a reduced element of GF(2^{self.m})")
        return FieldElement(self, value)

    def check(self, a):
        if a.field is not self and a.field != self:
            raise ContextMismatchError("operands belong to different fields")

    def __eq__(self, other):
        return isinstance(other, Field) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"Field({self.m}, {to_hex(self.modulus)})"

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    def random(self, rng, nonzero=False):
        """Element from ``rng.getrandbits``."""
        while True:
            v = rng.getrandbits(self.m)
            if v or not nonzero:
                return FieldElement(self, v)

    # Unmetered helpers on raw values; used for validation and oracles.

    def trace(self, a):
        t = v = a.value
        for _ in range(self.m - 1):
            v = self.kernel.sqr(v)
            t ^= v
        return t

    def half_trace(self, a):
        """Sum of a^(4^i), i < (m+1)/2; solves z^2 + z = a when m is odd and Tr(a) = 0."""
        if self.m % 2 == 0:
            raise ValueError("half-trace needs odd extension degree")
        h = v = a.value
        for _ in range((self.m - 1) // 2):
            v = self.kernel.sqr(self.kernel.sqr(v))
            h ^= v
        return FieldElement(self, h)

    def solve_quadratic(self, a):
        """A root z of z^2 + z = a, or None if Tr(a) = 1."""
        if self.trace(a):
            return None
        if self.m % 2:
            return self.half_trace(a)
        k = self.kernel
        tau = next(t for t in range(1, self.order) if self.trace(FieldElement(self, t)))
        # z = sum_{i=0}^{m-2} (sum_{j=i+1}^{m-1} tau^(2^j)) a^(2^i)
        tpow = [tau]
        for _ in range(self.m - 1):
            tpow.append(k.sqr(tpow[-1]))
        z, apow = 0, a.value
        suffix = 0
        suffixes = [0] * self.m
        for j in range(self.m - 1, 0, -1):
            suffix ^= tpow[j]
            suffixes[j - 1] = suffix
        for i in range(self.m - 1):
            z ^= k.mul(suffixes[i], apow)
            apow = k.sqr(apow)
        return FieldElement(self, z)

    def inv_fermat(self, a):
        """a^(2^m - 2) by square-and-multiply; verification path for inversion."""
        if not a.value:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        k = self.kernel
        r, base, e = 1, a.value, self.order - 2
        while e:
            if e & 1:
                r = k.mul(r, base)
            base = k.sqr(base)
            e >>= 1
        return FieldElement(self, r)


class FieldElement:
    """Reduced element of a :class:`Field`; ``value`` bit i is the coefficient of x^i."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ContextMismatchError("operands belong to different fields")
            return other.value
        if isinstance(other, int) and 0 <= other < self.field.order:
            return other
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        meter = _ACTIVE.get()
        if meter is not None:
            meter.A += 1
        return FieldElement(self.field, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        meter = _ACTIVE.get()
        if meter is not None:
            meter.M += 1
        return FieldElement(self.field, self.field.kernel.mul(self.value, v))

    __rmul__ = __mul__

    def mul(self, other, kind="M"):
        """Product recorded under cost class ``kind`` (M, m_c, m_t or m_s)."""
        v = self._other(other)
        if v is None:
            raise TypeError(f"cannot multiply by {other!r}")
        meter = _ACTIVE.get()
        if meter is not None:
            meter.count(MUL_KINDS[kind])
        return FieldElement(self.field, self.field.kernel.mul(self.value, v))

    def square(self):
        meter = _ACTIVE.get()
        if meter is not None:
            meter.S += 1
        return FieldElement(self.field, self.field.kernel.sqr(self.value))

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        meter = _ACTIVE.get()
        if meter is not None:
            meter.I += 1
        return FieldElement(self.field, self.field.kernel.inv(self.value))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            other = self.field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        first = True
        while n:
            if n & 1:
                result = base if first else result * base
                first = False
            n >>= 1
            if n:
                base = base.square()
        return result

    def root(self, k=2):
        """The unique k-th root, k a power of two, as repeated squaring (metered as S)."""
        if k < 1 or k & (k - 1):
            raise ValueError("root order must be a power of two")
        r = self
        while k > 1:
            for _ in range(self.field.m - 1):
                r = r.square()
            k >>= 1
        return r

    def sqrt(self):
        return self.root(2)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and (other.field is self.field or other.field == self.field)
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def hex(self):
        return to_hex(self.value)

    def __repr__(self):
        return f"FieldElement({self.hex()})"

    __str__ = hex


# -- functional surface -------------------------------------------------------------

def _charge(kind, meter):
    meter = meter if meter is not None else _ACTIVE.get()
    if meter is not None:
        meter.count(kind)


def _same_field(a, b):
    if a.field is not b.field and a.field != b.field:
        raise ContextMismatchError("operands belong to different fields")


def fe_mul(a, b, meter=None, kind="M"):
    """Reduced product; increments exactly one of M, m_c, m_t, m_s."""
    _same_field(a, b)
    _charge(MUL_KINDS[kind], meter)
    return FieldElement(a.field, a.field.kernel.mul(a.value, b.value))


def fe_sqr(a, meter=None):
    _charge("S", meter)
    return FieldElement(a.field, a.field.kernel.sqr(a.value))


def fe_inv(a, meter=None):
    if not a.value:
        raise ZeroDivisionError("inverse of zero in GF(2^m)")
    _charge("I", meter)
    return FieldElement(a.field, a.field.kernel.inv(a.value))


def fe_root(a, k=2, meter=None):
    """k-th root for k in {2, 4}: a^(2^(m-1)) applied log2(k) times, each squaring metered."""
    if k not in (2, 4):
        raise ValueError("only square and fourth roots are provided")
    steps = (a.field.m - 1) * (1 if k == 2 else 2)
    v, sqr = a.value, a.field.kernel.sqr
    for _ in range(steps):
        v = sqr(v)
    _charge_n("S", steps, meter)
    return FieldElement(a.field, v)


def _charge_n(kind, n, meter):
    meter = meter if meter is not None else _ACTIVE.get()
    if meter is not None and n:
        meter.count(kind, n)
