"""Command-line front end: ``binform <command> [options]``.

Single results are printed one per line in the text encodings of
:mod:`binform.codec`; vector files, cost reports and benchmarks are JSON.
Errors go to stderr and the exit status is nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench, codec, opmeter, vectors
from .binfield import Field
from .errors import BinformError, EncodingError
from .kummer import VARIANTS, OrientedKummerCurve
from .mu4form import curve_from_j
from .rng import SplitMix64
from .wsref import WeierstrassCurve

DEFAULT_FIELD = "163"
ENV_FIELD = "BINFORM_DEFAULT_FIELD"


class CLIError(BinformError):
    pass


# -- shared helpers -------------------------------------------------------------

def _field(args):
    # the environment variable wins over --field
    text = os.environ.get(ENV_FIELD) or args.field or DEFAULT_FIELD
    return Field.parse(text)


def _curve(args, field, model=None):
    model = model or args.model
    if args.param is None:
        raise CLIError(f"--param is required for model {model}")
    return codec.make_curve(model, field, args.param)


def _scalar(text):
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scalar {text!r}") from None


def _point(curve, text):
    """A point encoding, or one of the shorthands O, T, 2T, 3T on the normal forms."""
    names = {"O": 0, "T": 1, "2T": 2, "3T": 3}
    if text in names:
        if isinstance(curve, WeierstrassCurve):
            if text != "O":
                raise EncodingError("torsion shorthands other than O need a normal-form model")
            return codec.identity(curve)
        return curve.torsion()[names[text]]
    return codec.decode_point(curve, text)


def _out(line):
    print(line)


# -- commands -------------------------------------------------------------------

def cmd_field(args):
    F = _field(args)
    if args.op == "info":
        _out(f"field: {F.label()}")
        _out(f"backend: {F.backend}")
        return 0
    xs = [F(x) for x in args.operands]
    arity = {"add": 2, "mul": 2, "sqr": 1, "inv": 1, "sqrt": 1, "trace": 1}[args.op]
    if len(xs) != arity:
        raise CLIError(f"{args.op} takes {arity} operand(s), got {len(xs)}")
    if args.op == "add":
        r = xs[0] + xs[1]
    elif args.op == "mul":
        r = xs[0] * xs[1]
    elif args.op == "sqr":
        r = xs[0].square()
    elif args.op == "inv":
        r = xs[0].inverse()
    elif args.op == "sqrt":
        r = xs[0].sqrt()
    else:
        _out(str(F.trace(xs[0])))
        return 0
    _out(r.hex())
    return 0


def cmd_curve(args):
    F = _field(args)
    if args.j is not None:
        E, C = curve_from_j(F(args.j))
        curve = codec.partner(C, args.model)
    elif args.param is not None:
        curve = _curve(args, F)
    else:
        curve = codec.partner(codec.make_curve("mu4", F, F.random(SplitMix64(args.seed), nonzero=True)), args.model)
    _out(f"model: {codec.model_of(curve)}")
    _out(f"param: {codec.curve_param(curve)}")
    _out(f"field: {F.label()}")
    _out(f"j: {curve.j_invariant().hex()}")
    if args.model != "ws":
        _out(f"ws: {codec.curve_param(curve.weierstrass())}")
        for name, P in zip(("O", "T", "2T", "3T"), curve.torsion()):
            _out(f"{name}: {P.encode()}")
    else:
        _out(f"O: {codec.identity(curve).encode()}")
    if args.points:
        rng = SplitMix64(args.seed)
        for _ in range(args.points):
            _out(f"point: {curve.random_point(rng=rng).encode()}")
    return 0


def cmd_add(args):
    curve = _curve(args, _field(args))
    _out(curve.add(_point(curve, args.P), _point(curve, args.Q)).encode())
    return 0


def cmd_double(args):
    curve = _curve(args, _field(args))
    _out(curve.double(_point(curve, args.P)).encode())
    return 0


def ladder_smul(n, P, variant="S4", trace=None):
    """[n]P through the Kummer ladder, handling the bases the ladder excludes.

    Weierstrass points go through the split mu4 partner.  The 2-torsion
    points O and 2T have [n]P in {O, P}, so they need no ladder.
    """
    curve = P.curve
    if P == curve.O or P == curve.T2:
        return P if n % 2 else curve.O
    K = OrientedKummerCurve(P)
    if trace is None:
        return K.smul(n, variant)
    if n < 0:
        return curve.neg(ladder_smul(-n, P, variant, trace))
    if n == 0:
        return curve.O
    R = K.recover(K.ladder(n, variant, trace))
    return curve.add(R, curve.neg(P))


def cmd_smul(args):
    curve = _curve(args, _field(args))
    P = _point(curve, args.point)
    n = args.scalar
    trace = [] if args.trace else None
    if args.method == "double-add":
        if args.trace:
            raise CLIError("--trace applies to --method ladder only")
        R = curve.smul(n, P)
    elif args.model == "ws":
        C = codec.partner(curve, "mu4")
        R = C.to_ws(ladder_smul(n, C.from_ws(P), args.variant, trace))
    else:
        R = ladder_smul(n, P, args.variant, trace)
    if trace is not None:
        for i, (bit, meter) in enumerate(trace):
            print(f"# step {i} bit {bit}: {meter}", file=sys.stderr)
    _out(R.encode())
    return 0


def cmd_convert(args):
    F = _field(args)
    if args.param is None:
        raise CLIError("--param (of the source curve) is required")
    source = codec.make_curve(args.source, F, args.param)
    P = _point(source, args.point)
    _out(codec.convert(P, source, args.target).encode())
    return 0


def cmd_vectors(args):
    if args.emit is not None:
        fields = tuple(int(x) for x in args.fields.split(",")) if args.fields else vectors.DEFAULT_FIELDS
        text = vectors.dumps(vectors.emit(args.seed, fields))
        if args.emit == "-":
            _out(text)
        else:
            with open(args.emit, "w") as fh:
                fh.write(text + "\n")
        return 0
    try:
        with open(args.check) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise EncodingError(f"{args.check}: not JSON: {exc}") from None
    results = vectors.check(doc)
    failed = [r for r in results if not r["pass"]]
    for r in results:
        status = "PASS" if r["pass"] else "FAIL"
        line = f"{status} suite {r['suite']} record {r['record']} {r['op']}"
        if not r["pass"] or args.verbose:
            _out(line + (f": {r['error']}" if not r["pass"] else ""))
    _out(f"{len(results) - len(failed)}/{len(results)} records pass")
    return 0 if results and not failed else 1


def cmd_cost(args):
    field = _field(args) if (args.field or os.environ.get(ENV_FIELD)) else None
    labels = args.claims or None
    for label in labels or ():
        if label not in opmeter.CLAIMS:
            raise CLIError(f"unknown claim {label!r}; known: {', '.join(opmeter.CLAIMS)}")
    reports = opmeter.run_claims(field, args.seed, labels)
    _out(opmeter.report_json(reports))
    return 0 if all(r["pass"] for r in reports) else 1


def cmd_bench(args):
    if args.kernels:
        report = {"kernels": bench.kernel_bench(_field(args).m, args.iters, args.seed)}
    else:
        report = bench.op_bench(_field(args), args.model, args.op, args.iters, args.seed, args.method)
    _out(json.dumps(report, indent=2, sort_keys=True))
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser():
    def shared(p, top):
        # separate action objects per parser, so subcommand defaults never mask top-level values
        p.add_argument("--field", default=None if top else argparse.SUPPRESS,
                       help=f"m or m:0xMODULUS (default {DEFAULT_FIELD}; ${ENV_FIELD} overrides)")
        p.add_argument("--seed", type=int, default=1 if top else argparse.SUPPRESS,
                       help="SplitMix64 seed (default 1)")

    parser = argparse.ArgumentParser(prog="binform",
                                     description="Binary elliptic curves in Z/4Z- and mu4-normal form.")
    shared(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    shared(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    def model_args(p, models=codec.MODELS):
        p.add_argument("--model", choices=models, default="mu4")
        p.add_argument("--param", help="curve parameter: e (z4), c (mu4), s (mu4ns) or a1,a2,a3,a4,a6 (ws)")

    p = command("field", cmd_field, "field arithmetic on hex elements")
    p.add_argument("op", nargs="?", default="info", choices=("info", "add", "mul", "sqr", "inv", "sqrt", "trace"))
    p.add_argument("operands", nargs="*")

    p = command("curve", cmd_curve, "describe a curve: invariants, partner and torsion")
    model_args(p)
    p.add_argument("--j", help="build the curve with this j-invariant instead of --param")
    p.add_argument("--points", type=int, default=0, help="also print this many random points")

    p = command("add", cmd_add, "P + Q")
    model_args(p)
    p.add_argument("P")
    p.add_argument("Q")

    p = command("double", cmd_double, "2P")
    model_args(p)
    p.add_argument("P")

    p = command("smul", cmd_smul, "[n]P")
    model_args(p)
    p.add_argument("--point", required=True)
    p.add_argument("--scalar", type=_scalar, required=True)
    p.add_argument("--method", choices=("ladder", "double-add"), default="ladder")
    p.add_argument("--variant", choices=VARIANTS, default="S4", help="ladder step variant")
    p.add_argument("--trace", action="store_true", help="per-bit operation counts on stderr")

    p = command("convert", cmd_convert, "map a point to another model of the same curve")
    p.add_argument("--from", dest="source", choices=codec.MODELS, required=True)
    p.add_argument("--to", dest="target", choices=codec.MODELS, required=True)
    p.add_argument("--param", help="parameter of the source curve")
    p.add_argument("--point", required=True)

    p = command("vectors", cmd_vectors, "emit or check test-vector files")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--emit", metavar="PATH", help="write a canonical suite ('-' for stdout)")
    g.add_argument("--check", metavar="PATH", help="replay a vector file")
    p.add_argument("--fields", help="comma-separated extension degrees for --emit (default 5,11,17)")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing records too")

    p = command("cost", cmd_cost, "check operation counts against the claimed costs")
    p.add_argument("claims", nargs="*", help=f"claim labels (default all: {', '.join(opmeter.CLAIMS)})")

    p = command("bench", cmd_bench, "meter and time one operation")
    model_args(p)
    p.add_argument("--op", choices=bench.OPS, default="add")
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--method", choices=("ladder", "double-add"), default="ladder", help="for --op smul")
    p.add_argument("--kernels", action="store_true", help="compare the field kernel backends instead")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BinformError, ValueError, ArithmeticError, OSError) as exc:
        print(f"binform: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
