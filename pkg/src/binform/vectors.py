"""Reproducible test-vector suites: emit and replay.

A vector file is JSON::

    {"format": "binform-vectors/1", "seed": 1,
     "suites": [{"field": {"m": 5, "modulus": "0x25"}, "model": "z4",
                 "params": {"param": "0x..."},
                 "records": [{"op": "add", "inputs": [...], "expected": ...}]}]}

Inputs and outputs use the text encodings of :mod:`binform.codec`; scalars,
bits and variant names are plain JSON values.  Kummer suites (model "kum")
add ``base_model`` and ``base`` to their params.  Everything random comes from
SplitMix64(seed), so a given seed always yields the same file.
"""

from __future__ import annotations

import json

from . import codec
from .binfield import Field, to_hex
from .errors import BinformError
from .kummer import OrientedKummerCurve, decode_pair
from .mu4form import Mu4Curve
from .rng import SplitMix64

FORMAT = "binform-vectors/1"
DEFAULT_FIELDS = (5, 11, 17)


class SchemaError(BinformError, ValueError):
    pass


# -- replay -------------------------------------------------------------------

def _scalar(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"expected an integer, got {x!r}")
    return x


def _p1(P):
    return P.encode()


def apply_op(ctx, op, inputs):
    """Run ``op`` on encoded ``inputs`` in a suite context; returns the encoded result."""
    curve, model = ctx["curve"], ctx["model"]
    pt = lambda s: codec.decode_point(curve, s)  # noqa: E731
    if model == "kum":
        K = ctx["kummer"]
        pair = lambda s: decode_pair(curve.field, s)  # noqa: E731
        if op == "lift":
            return K.lift(pt(inputs[0])).encode()
        if op == "recover":
            return K.recover(pair(inputs[0])).encode()
        if op == "step":
            return K.step(pair(inputs[0]), _scalar(inputs[1]), inputs[2]).encode()
        if op == "ladder":
            return K.ladder(_scalar(inputs[0]), inputs[1]).encode()
        if op == "smul_recover":
            return K.smul(_scalar(inputs[0]), inputs[1]).encode()
        raise SchemaError(f"unknown op {op!r} for model kum")
    if op == "add":
        return curve.add(pt(inputs[0]), pt(inputs[1])).encode()
    if op == "double":
        return curve.double(pt(inputs[0])).encode()
    if op == "neg":
        return curve.neg(pt(inputs[0])).encode()
    if op == "smul":
        return curve.smul(_scalar(inputs[0]), pt(inputs[1])).encode()
    if model == "ws":
        raise SchemaError(f"unknown op {op!r} for model ws")
    if op == "torsion":
        return [P.encode() for P in curve.torsion()]
    if op == "translate_T":
        return curve.translate_T(pt(inputs[0])).encode()
    if op == "to_ws":
        return curve.to_ws(pt(inputs[0])).encode()
    if op == "from_ws":
        return curve.from_ws(codec.decode_point(curve.weierstrass(), inputs[0])).encode()
    if op in ("pi1", "pi2") and model != "mu4ns":
        return _p1(getattr(curve, op)(pt(inputs[0])))
    if op == "convert":
        target = inputs[1]
        return codec.convert(pt(inputs[0]), curve, target).encode()
    if model == "mu4":
        if op == "add_complete":
            return curve.add_complete(pt(inputs[0]), pt(inputs[1])).encode()
        if op == "proj_add":
            return [_p1(u) for u in curve.proj_add(pt(inputs[0]), pt(inputs[1]))]
        if op == "iota":
            return curve.iota(pt(inputs[0])).encode()
        if op == "iota_inv":
            return curve.iota_inv(codec.decode_point(curve.z4_partner(), inputs[0])).encode()
    raise SchemaError(f"unknown op {op!r} for model {model}")


def _context(suite):
    for key in ("field", "model", "params", "records"):
        if key not in suite:
            raise SchemaError(f"suite is missing {key!r}")
    fd = suite["field"]
    field = Field(fd["m"], int(fd["modulus"], 16))
    model, params = suite["model"], suite["params"]
    if model == "kum":
        curve = codec.make_curve(params["base_model"], field, params["param"])
        K = OrientedKummerCurve(codec.decode_point(curve, params["base"]))
        return {"model": "kum", "curve": curve, "kummer": K}
    return {"model": model, "curve": codec.make_curve(model, field, params["param"])}


def check(doc):
    """Replay every record; returns a list of per-record result dicts."""
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise SchemaError(f"not a {FORMAT} document")
    results = []
    for si, suite in enumerate(doc.get("suites", [])):
        try:
            ctx = _context(suite)
        except (KeyError, TypeError, ValueError) as exc:
            results.append({"suite": si, "record": None, "op": None, "pass": False,
                            "error": f"suite {si}: {exc}"})
            continue
        for ri, rec in enumerate(suite["records"]):
            entry = {"suite": si, "record": ri, "op": rec.get("op") if isinstance(rec, dict) else None}
            try:
                if not isinstance(rec, dict) or not {"op", "inputs", "expected"} <= rec.keys():
                    raise SchemaError("record needs 'op', 'inputs' and 'expected'")
                got = apply_op(ctx, rec["op"], rec["inputs"])
                entry["pass"] = got == rec["expected"]
                if not entry["pass"]:
                    entry["error"] = f"expected {rec['expected']!r}, got {got!r}"
            except (ArithmeticError, IndexError, KeyError, TypeError, ValueError) as exc:
                entry["pass"] = False
                entry["error"] = f"suite {si} record {ri}: {type(exc).__name__}: {exc}"
            results.append(entry)
    return results


# -- emission ---------------------------------------------------------------------

def _suite(field, model, params, records):
    return {"field": {"m": field.m, "modulus": to_hex(field.modulus)},
            "model": model, "params": params, "records": records}


def _records(ctx, specs):
    return [{"op": op, "inputs": inputs, "expected": apply_op(ctx, op, inputs)} for op, inputs in specs]


def _point_specs(curve, rng, k=4):
    pts = [curve.random_point(rng=rng).encode() for _ in range(k)]
    O = curve.O.encode()
    specs = [("add", [pts[i], pts[i + 1]]) for i in range(k - 1)]
    minus = curve.neg(codec.decode_point(curve, pts[1])).encode()
    specs += [("add", [pts[0], O]), ("add", [pts[0], pts[0]]), ("add", [pts[1], minus])]
    specs += [("double", [p]) for p in pts[:2]]
    specs += [("neg", [pts[0]])]
    specs += [("smul", [0, pts[0]]), ("smul", [1, pts[0]]), ("smul", [rng.getrandbits(32), pts[1]])]
    return pts, specs


def emit(seed=1, fields=DEFAULT_FIELDS):
    """A canonical suite over the given extension degrees."""
    rng = SplitMix64(seed)
    suites = []
    for m in fields:
        F = Field(m)
        C = Mu4Curve(F.random(rng, nonzero=True))
        E, N, W = C.z4_partner(), C.nonsplit_partner(), C.weierstrass()

        for curve in (E, C, N):
            model = curve.TAG
            ctx = {"model": model, "curve": curve}
            pts, specs = _point_specs(curve, rng)
            specs.insert(0, ("torsion", []))
            specs += [("translate_T", [P.encode()]) for P in curve.torsion()]
            specs += [("to_ws", [p]) for p in pts[:2]] + [("to_ws", [curve.O.encode()])]
            specs += [("from_ws", [W.random_point(rng=rng).encode()]), ("from_ws", ["ws:infinity"])]
            specs += [("convert", [p, t]) for p in pts[:1] for t in codec.MODELS if t != model]
            if model != "mu4ns":
                specs += [(op, [p]) for op in ("pi1", "pi2") for p in pts[:2]]
            if model == "mu4":
                specs += [("add_complete", [pts[0], pts[1]]), ("proj_add", [pts[0], pts[1]])]
                specs += [("add_complete", [pts[0], curve.add(codec.decode_point(curve, pts[0]), curve.T2).encode()])]
                specs += [("iota", [P.encode()]) for P in curve.torsion()] + [("iota", [pts[2]])]
                specs += [("iota_inv", [E.random_point(rng=rng).encode()])]
            suites.append(_suite(F, model, {"param": curve.param().hex()}, _records(ctx, specs)))

        ctx = {"model": "ws", "curve": W}
        pts = [W.random_point(rng=rng).encode() for _ in range(3)]
        specs = [("add", [pts[0], pts[1]]), ("add", [pts[0], "ws:infinity"]), ("double", [pts[2]]),
                 ("neg", [pts[0]]), ("smul", [rng.getrandbits(32), pts[1]])]
        suites.append(_suite(F, "ws", {"param": codec.curve_param(W)}, _records(ctx, specs)))

        for curve in (E, C):
            while True:
                P = curve.random_point(rng=rng)
                if P not in (curve.O, curve.T2):
                    break
            K = OrientedKummerCurve(P)
            ctx = {"model": "kum", "curve": curve, "kummer": K}
            Q = curve.random_point(rng=rng)
            pair = K.lift(Q).encode()
            specs = [("lift", [Q.encode()]), ("lift", [P.encode()]), ("recover", [pair])]
            specs += [("step", [pair, b, v]) for b in (0, 1) for v in ("S4", "S5")]
            n = rng.getrandbits(24)
            specs += [("ladder", [0, "S4"]), ("ladder", [n, "S4"]), ("ladder", [n, "S5"])]
            specs += [("smul_recover", [k, "S4"]) for k in (0, 1, 2, n)]
            params = {"base_model": curve.TAG, "param": curve.param().hex(), "base": P.encode()}
            suites.append(_suite(F, "kum", params, _records(ctx, specs)))
    return {"format": FORMAT, "seed": seed, "suites": suites}


def dumps(doc):
    return json.dumps(doc, indent=1, sort_keys=True)
