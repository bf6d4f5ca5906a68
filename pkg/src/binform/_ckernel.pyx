# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2^m) kernel: word-level carry-less multiply, reduction, inversion.

Operands cross the boundary as Python ints and are unpacked into fixed-size
little-endian uint64 arrays.  Degrees up to MAXBITS are handled here; larger
moduli are rejected at construction so the caller can fall back.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

cdef enum:
    MAXW = 10
    MAXBITS = 576

NAME = "cython"
MAX_DEGREE = MAXBITS - 1


cdef inline void _clmul64(uint64_t a, uint64_t b, uint64_t* lo, uint64_t* hi) noexcept nogil:
    # 4-bit window; the three top bits of a are patched in afterwards.
    cdef uint64_t tab[16]
    cdef uint64_t l, h, top
    cdef int i
    cdef uint64_t a0 = a & (<uint64_t>0x1FFFFFFFFFFFFFFFULL)
    tab[0] = 0
    tab[1] = a0
    for i in range(2, 16, 2):
        tab[i] = tab[i >> 1] << 1
        tab[i + 1] = tab[i] ^ a0
    l = tab[b & 15]
    h = 0
    for i in range(4, 64, 4):
        top = tab[(b >> i) & 15]
        l ^= top << i
        h ^= top >> (64 - i)
    for i in range(61, 64):
        if (a >> i) & 1:
            l ^= b << i
            h ^= b >> (64 - i)
    lo[0] = l
    hi[0] = h


cdef inline void _unpack(object x, uint64_t* w, int nw):
    cdef bytes raw = x.to_bytes(8 * nw, "little")
    memcpy(w, PyBytes_AS_STRING(raw), 8 * nw)


cdef inline object _pack(uint64_t* w, int nw):
    return int.from_bytes(PyBytes_FromStringAndSize(<char*>w, 8 * nw), "little")


cdef inline int _deg(uint64_t* w, int nw) noexcept nogil:
    cdef int i, b
    for i in range(nw - 1, -1, -1):
        if w[i]:
            b = 63
            while not ((w[i] >> b) & 1):
                b -= 1
            return 64 * i + b
    return -1


cdef inline void _shr1(uint64_t* w, int nw) noexcept nogil:
    cdef int i
    for i in range(nw - 1):
        w[i] = (w[i] >> 1) | (w[i + 1] << 63)
    w[nw - 1] >>= 1


cdef inline uint64_t _get_bits(uint64_t* r, int lo, int width) noexcept nogil:
    cdef int word = lo >> 6, off = lo & 63
    cdef uint64_t v = r[word] >> off
    if off:
        v |= r[word + 1] << (64 - off)
    if width < 64:
        v &= ((<uint64_t>1) << width) - 1
    return v


cdef inline void _xor_bits(uint64_t* r, int pos, uint64_t v) noexcept nogil:
    cdef int word = pos >> 6, off = pos & 63
    r[word] ^= v << off
    if off:
        r[word + 1] ^= v >> (64 - off)


cdef class Kernel:
    """Reduction modulo a fixed polynomial of degree ``m`` (need not be irreducible)."""

    cdef readonly object modulus
    cdef readonly int m
    cdef int nw
    cdef int nterms
    cdef int fold
    cdef int terms[MAXBITS]
    cdef uint64_t f[MAXW]

    def __cinit__(self, modulus):
        cdef int i
        if modulus < 2:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus
        self.m = modulus.bit_length() - 1
        if not modulus & 1:
            raise ValueError("compiled kernel needs a modulus with nonzero constant term")
        if self.m > MAX_DEGREE:
            raise ValueError(f"degree {self.m} exceeds compiled kernel limit {MAX_DEGREE}")
        self.nw = (self.m + 64) // 64
        self.nterms = 0
        for i in range(self.m):
            if (modulus >> i) & 1:
                self.terms[self.nterms] = i
                self.nterms += 1
        self.fold = self.m - self.terms[self.nterms - 1]
        if self.fold > 64:
            self.fold = 64
        memset(self.f, 0, sizeof(self.f))
        _unpack(modulus, self.f, self.nw)

    cdef void _reduce(self, uint64_t* r, int nr) noexcept nogil:
        # Fold chunks of at most `fold` bits from the top; `fold` keeps the
        # shifted copies strictly below the chunk that was just cleared.
        cdef int m = self.m, top = 64 * nr - 1, lo, j
        cdef uint64_t v
        r[nr] = 0
        while top >= m:
            lo = top - self.fold + 1
            if lo < m:
                lo = m
            v = _get_bits(r, lo, top - lo + 1)
            if v:
                _xor_bits(r, lo, v)
                for j in range(self.nterms):
                    _xor_bits(r, lo - m + self.terms[j], v)
            top = lo - 1

    def mul(self, a, b):
        cdef uint64_t x[MAXW]
        cdef uint64_t y[MAXW]
        cdef uint64_t r[2 * MAXW + 1]
        cdef uint64_t lo, hi
        cdef int i, j, nw = self.nw
        if nw == 1:
            _clmul64(<uint64_t>a, <uint64_t>b, &lo, &hi)
            r[0] = lo
            r[1] = hi
            self._reduce(r, 2)
            return r[0]
        _unpack(a, x, nw)
        _unpack(b, y, nw)
        memset(r, 0, sizeof(uint64_t) * 2 * nw)
        for i in range(nw):
            if not x[i]:
                continue
            for j in range(nw):
                _clmul64(x[i], y[j], &lo, &hi)
                r[i + j] ^= lo
                r[i + j + 1] ^= hi
        self._reduce(r, 2 * nw)
        return _pack(r, nw)

    def sqr(self, a):
        cdef uint64_t x[MAXW]
        cdef uint64_t r[2 * MAXW + 1]
        cdef uint64_t lo, hi, v
        cdef int i, k, nw = self.nw
        if nw == 1:
            x[0] = <uint64_t>a
        else:
            _unpack(a, x, nw)
        for i in range(nw):
            v = x[i]
            lo = 0
            hi = 0
            for k in range(32):
                lo |= ((v >> k) & 1) << (2 * k)
                hi |= ((v >> (k + 32)) & 1) << (2 * k)
            r[2 * i] = lo
            r[2 * i + 1] = hi
        self._reduce(r, 2 * nw)
        if nw == 1:
            return r[0]
        return _pack(r, nw)

    def reduce(self, p):
        cdef uint64_t r[2 * MAXW + 1]
        cdef int nr
        if p.bit_length() <= self.m:
            return p
        nr = (p.bit_length() + 63) // 64
        if nr > 2 * MAXW:
            raise ValueError("operand too large for compiled kernel")
        _unpack(p, r, nr)
        self._reduce(r, nr)
        return _pack(r, self.nw)

    def inv(self, a):
        """Inverse by the binary extended Euclidean algorithm."""
        cdef uint64_t u[MAXW]
        cdef uint64_t v[MAXW]
        cdef uint64_t g1[MAXW]
        cdef uint64_t g2[MAXW]
        cdef int nw = self.nw, i, du, dv
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        memset(u, 0, sizeof(u))
        memset(g1, 0, sizeof(g1))
        memset(g2, 0, sizeof(g2))
        _unpack(a, u, nw)
        memcpy(v, self.f, sizeof(uint64_t) * nw)
        g1[0] = 1
        while True:
            du = _deg(u, nw)
            dv = _deg(v, nw)
            if du < 0 or dv < 0:
                raise ZeroDivisionError("element not invertible modulo a reducible polynomial")
            if du == 0:
                return _pack(g1, nw)
            if dv == 0:
                return _pack(g2, nw)
            while not (u[0] & 1):
                _shr1(u, nw)
                if g1[0] & 1:
                    for i in range(nw):
                        g1[i] ^= self.f[i]
                _shr1(g1, nw)
            while not (v[0] & 1):
                _shr1(v, nw)
                if g2[0] & 1:
                    for i in range(nw):
                        g2[i] ^= self.f[i]
                _shr1(g2, nw)
            if _deg(u, nw) > _deg(v, nw):
                for i in range(nw):
                    u[i] ^= v[i]
                    g1[i] ^= g2[i]
            else:
                for i in range(nw):
                    v[i] ^= u[i]
                    g2[i] ^= g1[i]

