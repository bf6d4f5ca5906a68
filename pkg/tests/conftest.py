import pytest

from binform import Field, Mu4Curve
from binform.rng import SplitMix64


def naive_mul(a, b, modulus):
    """Shift-and-add product in GF(2)[x] reduced bit by bit; independent of the kernels."""
    m = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return r


def oracle_sum(curve, P, Q):
    """P + Q computed on the Weierstrass partner and compared there."""
    W = curve.weierstrass()
    return W.add(curve.to_ws(P), curve.to_ws(Q))


def curve_family(field, c):
    """(E, C, N): the z4, split mu4 and non-split mu4 models of one curve."""
    C = Mu4Curve(field(c))
    return C.z4_partner(), C, C.nonsplit_partner()


@pytest.fixture(scope="session")
def F3():
    return Field(3)


@pytest.fixture(scope="session")
def F5():
    return Field(5)


@pytest.fixture(scope="session")
def F11():
    return Field(11)


@pytest.fixture(scope="session")
def F17():
    return Field(17)


@pytest.fixture(scope="session")
def F163():
    return Field(163)


@pytest.fixture
def rng():
    return SplitMix64(2024)
