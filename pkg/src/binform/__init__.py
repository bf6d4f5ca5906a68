"""Elliptic-curve arithmetic over GF(2^m) in Z/4Z-normal and mu4-normal form.

The main entry points are re-exported here; see the submodules for details.
"""

from .binfield import Field, FieldElement, OpMeter, unmetered
from .errors import (
    BinformError,
    ContextMismatchError,
    EncodingError,
    ExceptionalInputError,
    NotOnCurveError,
    SingularCurveError,
    SupersingularError,
    UnsupportedBaseError,
)
from .kummer import KummerPair, OrientedKummerCurve, ladder, smul_recover
from .mu4form import Mu4Curve, Mu4NonsplitCurve, curve_from_j
from .rng import SplitMix64
from .wsref import INFINITY, WeierstrassCurve, WeierstrassPoint
from .z4form import Z4Curve

__version__ = "0.1.0"

__all__ = [
    "BinformError", "ContextMismatchError", "EncodingError", "ExceptionalInputError", "Field",
    "FieldElement", "INFINITY", "KummerPair", "Mu4Curve", "Mu4NonsplitCurve", "NotOnCurveError",
    "OpMeter", "OrientedKummerCurve", "SingularCurveError", "SplitMix64", "SupersingularError",
    "UnsupportedBaseError", "WeierstrassCurve", "WeierstrassPoint", "Z4Curve", "curve_from_j",
    "ladder", "smul_recover", "unmetered",
]
