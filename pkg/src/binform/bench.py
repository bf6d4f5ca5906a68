"""Timing harness for the field kernels and the curve operations.

Results come in two sections.  ``meter`` is deterministic: the operation
counts of one call.  ``timing`` is wall-clock and varies from run to run.
"""

from __future__ import annotations

import statistics
import time

from . import _kernel
from .binfield import Field, OpMeter
from .codec import partner
from .kummer import OrientedKummerCurve
from .mu4form import Mu4Curve
from .rng import SplitMix64

OPS = ("add", "double", "smul", "ladder-step")


def _median_ns(fn, iters, repeat=5):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        for _ in range(iters):
            fn()
        samples.append((time.perf_counter_ns() - t0) / iters)
    return statistics.median(samples)


def kernel_bench(m=163, iters=2000, seed=1):
    """ns/op of mul, sqr and inv for every available kernel backend."""
    F = Field(m)
    rng = SplitMix64(seed)
    a, b = rng.getrandbits(m) | 1, rng.getrandbits(m) | 1
    out = {}
    for name in _kernel.BACKENDS:
        try:
            k = _kernel.make_kernel(F.modulus, name)
        except ValueError:
            continue
        out[name] = {
            "mul": _median_ns(lambda: k.mul(a, b), iters),
            "sqr": _median_ns(lambda: k.sqr(a), iters),
            "inv": _median_ns(lambda: k.inv(a), max(1, iters // 10)),
        }
    return out


def op_bench(field, model="mu4", op="add", iters=200, seed=1, method="ladder"):
    """Meter one call of ``op`` on a random curve of ``model``, then time it."""
    if op not in OPS:
        raise ValueError(f"unknown op {op!r}; expected one of {', '.join(OPS)}")
    rng = SplitMix64(seed)
    curve = partner(Mu4Curve(field.random(rng, nonzero=True)), model)
    P, Q = curve.random_point(rng=rng), curve.random_point(rng=rng)
    n = rng.getrandbits(field.m) | 1 << (field.m - 1)
    if model == "ws":
        calls = {"add": lambda: curve.add(P, Q), "double": lambda: curve.double(P),
                 "smul": lambda: curve.smul(n, P)}
    else:
        K = OrientedKummerCurve(P)
        pair = K.lift(Q)
        smul = (lambda: K.smul(n)) if method == "ladder" else (lambda: curve.smul(n, P))
        add = curve.add_fast if model == "mu4" else curve.add
        calls = {"add": lambda: add(P, Q), "double": lambda: curve.double(P), "smul": smul,
                 "ladder-step": lambda: K.step(pair, 1)}
    if op not in calls:
        raise ValueError(f"op {op!r} is not available for model {model}")
    fn = calls[op]
    with OpMeter() as meter:
        fn()
    iters = max(1, iters)
    return {
        "model": model, "op": op, "field": field.label(), "backend": field.backend,
        "meter": meter.nonzero(include_additions=False),
        "timing": {"iters": iters, "median_ns": _median_ns(fn, iters, repeat=3 if iters > 1 else 1)},
    }
