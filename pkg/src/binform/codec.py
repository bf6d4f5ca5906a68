"""Text encodings for curves and points, keyed by model tag.

Field elements are lowercase hex with a ``0x`` prefix.  Projective points
are scaled so the first nonzero coordinate is 0x1:

    z4:(h0:h1:h2:h3)   mu4:(h0:h1:h2:h3)   mu4ns:(h0:h1:h2:h3)
    ws:(x,y) or ws:infinity
    kum:((u0:u1),(v0:v1))

A curve is named by its model tag and parameter: e for z4, c for mu4,
s for mu4ns, and the five coefficients a1,a2,a3,a4,a6 for ws.
"""

from __future__ import annotations

from .binfield import fe_root
from .errors import EncodingError, NotOnCurveError
from .mu4form import Mu4Curve, Mu4NonsplitCurve
from .wsref import INFINITY, WeierstrassCurve, WeierstrassPoint
from .z4form import Z4Curve

MODELS = ("z4", "mu4", "mu4ns", "ws")


def make_curve(model, field, param):
    """Curve from a model tag and its parameter text (or FieldElement)."""
    if model == "ws":
        if isinstance(param, str):
            parts = [p.strip() for p in param.split(",")]
            if len(parts) != 5:
                raise EncodingError("ws parameter is five comma-separated coefficients a1,a2,a3,a4,a6")
            param = parts
        return WeierstrassCurve(*(_elem(field, a) for a in param))
    value = _elem(field, param)
    if model == "z4":
        return Z4Curve(value)
    if model == "mu4":
        return Mu4Curve(value)
    if model == "mu4ns":
        return Mu4NonsplitCurve(value)
    raise EncodingError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")


def _elem(field, text):
    try:
        return field(text)
    except ValueError as exc:
        raise EncodingError(str(exc)) from None


def curve_param(curve):
    """The parameter text that :func:`make_curve` accepts back."""
    if isinstance(curve, WeierstrassCurve):
        return ",".join(a.hex() for a in curve.coefficients())
    return curve.param().hex()


def model_of(curve):
    return "ws" if isinstance(curve, WeierstrassCurve) else curve.TAG


def encode_point(P):
    return P.encode()


def decode_point(curve, text):
    """Parse and validate a point on ``curve``."""
    text = text.strip()
    if isinstance(curve, WeierstrassCurve):
        return _decode_ws(curve, text)
    try:
        return curve.decode(text)
    except NotOnCurveError:
        raise
    except ValueError as exc:
        raise EncodingError(str(exc)) from None


def _decode_ws(curve, text):
    if text == "ws:infinity":
        return INFINITY
    if not (text.startswith("ws:(") and text.endswith(")")):
        raise EncodingError(f"expected 'ws:(x,y)' or 'ws:infinity', got {text!r}")
    parts = text[4:-1].split(",")
    if len(parts) != 2:
        raise EncodingError(f"expected two affine coordinates in {text!r}")
    x, y = (_elem(curve.field, p.strip()) for p in parts)
    P = WeierstrassPoint(x, y)
    if not curve.is_on_curve(P):
        raise NotOnCurveError(f"{text} is not on {curve!r}")
    return P


def identity(curve):
    return INFINITY if isinstance(curve, WeierstrassCurve) else curve.O


# -- conversions between models ------------------------------------------------------

def partner(curve, model):
    """The curve of type ``model`` isomorphic to ``curve`` under the package maps.

    All four models of one family share y^2 + xy = x^3 + a x with a = e^-2 = c^-4 = s.
    """
    F = curve.field
    if isinstance(curve, WeierstrassCurve):
        if (curve.a1, curve.a2, curve.a3, curve.a6) != (F.one, F.zero, F.zero, F.zero) or not curve.a4:
            raise EncodingError("only y^2 + xy = x^3 + a x converts to the normal forms")
        c = fe_root(curve.a4.inverse(), 4)
    elif isinstance(curve, Z4Curve):
        c = fe_root(curve.e, 2)
    else:
        c = curve.c
    C = Mu4Curve(c)
    if model == "mu4":
        return C
    if model == "z4":
        return C.z4_partner()
    if model == "mu4ns":
        return C.nonsplit_partner()
    if model == "ws":
        return C.weierstrass()
    raise EncodingError(f"unknown model {model!r}")


def convert(P, source, model):
    """Image of P (a point of ``source``) on ``partner(source, model)``."""
    src = model_of(source)
    target = partner(source, model)
    if src == model:
        return P
    if src == "ws":
        return target.from_ws(P)
    if model == "ws":
        return source.to_ws(P)
    # route through the split mu4 form
    C = partner(source, "mu4")
    if src == "z4":
        S = C.iota_inv(P)
    elif src == "mu4ns":
        S = source.to_split(P, C)
    else:
        S = P
    if model == "z4":
        return C.iota(S, target)
    if model == "mu4ns":
        return C.to_nonsplit(S, target)
    return S
