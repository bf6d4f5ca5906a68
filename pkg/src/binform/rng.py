"""SplitMix64: a tiny generator whose output is easy to reproduce in any language.

Vector suites and seeded random points are drawn from it, so an emitted suite
can be regenerated bit-for-bit by an independent implementation.
``getrandbits(k)`` concatenates successive 64-bit outputs little-endian (first
output is the least significant word) and keeps the low ``k`` bits.
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed=0):
        self.state = seed & _MASK

    def next64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def getrandbits(self, k):
        if k <= 0:
            return 0
        v, shift = 0, 0
        while shift < k:
            v |= self.next64() << shift
            shift += 64
        return v & ((1 << k) - 1)

    def randbelow(self, n):
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        k = (n - 1).bit_length()
        while True:
            v = self.getrandbits(k)
            if v < n:
                return v
