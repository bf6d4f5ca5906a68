"""Operation-count claims and exact checks against metered runs.

Each :class:`CostClaim` names a straight-line program and the exact number
of field operations it should take.  :func:`assert_cost` runs one instance on
generic inputs and compares every counter for equality, so an extra squaring
fails just like a missing one.  Additions are never compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .binfield import Field, OpMeter
from .errors import ExceptionalInputError
from .kummer import OrientedKummerCurve
from .mu4form import Mu4Curve
from .rng import SplitMix64
from .z4form import Z4Curve

COMPARED = ("M", "S", "m_c", "m_t", "m_s", "I")


@dataclass(frozen=True)
class CostClaim:
    label: str
    expected: dict = field(default_factory=dict)
    source: str = ""

    def __post_init__(self):
        for k, v in self.expected.items():
            if k not in COMPARED:
                raise ValueError(f"unknown counter {k!r}")
            if not isinstance(v, int) or v < 0:
                raise ValueError("expected counts must be nonnegative integers")

    def full(self):
        return {k: self.expected.get(k, 0) for k in COMPARED}


CLAIMS = {c.label: c for c in (
    CostClaim("z4.add", {"M": 12},
              "Z/4Z form: two bilinear projection laws (4M each) and the skew-Segre map (4M)"),
    CostClaim("z4.double", {"M": 7, "S": 2},
              "Z/4Z form: Karatsuba first projection (3M), squared second projection (2S), skew-Segre (4M)"),
    CostClaim("mu4.add", {"M": 7, "S": 2, "m_c": 2},
              "split mu4 form: law 1 on Z_i = X_i Y_i with one Karatsuba product"),
    CostClaim("mu4.double", {"M": 2, "S": 5, "m_c": 7},
              "split mu4 form: c^4-scaled duplication through U, V, W and G^2 = (U + c^2 V + W) W"),
    CostClaim("mu4ns.add", {"M": 7, "S": 2},
              "non-split mu4 form: constant-free law 4 on Z = (X0Y1, X1Y2, X2Y3, X3Y0)"),
    CostClaim("mu4ns.double", {"M": 2, "S": 5, "m_s": 2},
              "non-split mu4 form: duplication with s and s^2 as the only constants"),
    CostClaim("kummer.step.S5", {"M": 4, "S": 5, "m_t": 1, "m_c": 1},
              "Montgomery step on the oriented Kummer curve, pseudo-addition (t1 A^2 : t0 B^2)"),
    CostClaim("kummer.step.S4", {"M": 4, "S": 4, "m_t": 1, "m_c": 2},
              "Montgomery step using the curve equation to trade a squaring for a constant product"),
    CostClaim("kummer.ladder.bit", {"M": 4, "S": 4, "m_t": 1, "m_c": 2},
              "one ladder bit, either bit value, S4 step"),
)}

# Rows of the comparison table for models this package does not implement.
# Documentation only; nothing here is measured.
REFERENCE_ROWS = {
    "Hessian": {"double": "6M + 3S", "add": "12M"},
    "binary Edwards": {"double": "2M + 5S + 2m", "add": "16M + 1S + 4m"},
    "Lopez-Dahab (a2=0)": {"double": "2M + 5S + 1m", "add": "14M + 3S"},
    "Lopez-Dahab (a2=1)": {"double": "2M + 4S + 2m", "add": "13M + 3S"},
}

# Rows reproduced by measurement: table label -> (doubling claim, addition claim).
MEASURED_ROWS = {
    "Z/4Z-normal form": ("z4.double", "z4.add"),
    "mu4-normal form (non-split)": ("mu4ns.double", "mu4ns.add"),
}


def assert_cost(claim, run, attempts=8):
    """Meter ``run()`` and compare with ``claim`` exactly.

    ``run`` should perform one instance of the operation, drawing fresh
    inputs on each call.  ExceptionalInputError means the input was not
    generic; the run is retried and, if every attempt is exceptional, the
    report is marked inconclusive.
    """
    for _ in range(attempts):
        meter = OpMeter()
        try:
            with meter:
                run()
        except ExceptionalInputError:
            continue
        observed = {k: getattr(meter, k) for k in COMPARED}
        expected = claim.full()
        delta = {k: observed[k] - expected[k] for k in COMPARED if observed[k] != expected[k]}
        return {"claim": claim.label, "expected": claim.expected, "observed": meter.nonzero(),
                "pass": not delta, "source": claim.source, "delta": delta}
    return {"claim": claim.label, "expected": claim.expected, "observed": None,
            "pass": False, "source": claim.source, "inconclusive": True}


def report_json(reports):
    return json.dumps(reports, indent=2, sort_keys=True)


def _curves(field, rng):
    C = Mu4Curve(field.random(rng, nonzero=True))
    return Z4Curve(C.c2), C, C.nonsplit_partner()


def claim_runners(field=None, seed=0):
    """Thunks running one generic instance of each claimed operation."""
    field = field or Field(163)
    rng = SplitMix64(seed)
    E, C, N = _curves(field, rng)

    def pts(curve, k):
        return [curve.random_point(rng=rng) for _ in range(k)]

    def kummer_state():
        P, Q = pts(E, 2)
        K = OrientedKummerCurve(P)
        return K, K.lift(Q)

    def step(variant):
        def run():
            with OpMeter():
                K, pair = kummer_state()
            K.step(pair, rng.getrandbits(1), variant)
        return run

    def ladder_bit():
        with OpMeter():  # setup stays out of the caller's meter
            K, pair = kummer_state()
        K.step(pair, rng.getrandbits(1), "S4")

    def prepared(op, curve, k):
        def run():
            with OpMeter():
                args = pts(curve, k)
            op(*args)
        return run

    return {
        "z4.add": prepared(E.add, E, 2),
        "z4.double": prepared(E.double, E, 1),
        "mu4.add": prepared(C.add_fast, C, 2),
        "mu4.double": prepared(C.double, C, 1),
        "mu4ns.add": prepared(N.add, N, 2),
        "mu4ns.double": prepared(N.double, N, 1),
        "kummer.step.S5": step("S5"),
        "kummer.step.S4": step("S4"),
        "kummer.ladder.bit": ladder_bit,
    }


def run_claims(field=None, seed=0, labels=None):
    runners = claim_runners(field, seed)
    labels = labels or list(CLAIMS)
    return [assert_cost(CLAIMS[label], runners[label]) for label in labels]
