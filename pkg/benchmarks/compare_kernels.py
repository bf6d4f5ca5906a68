"""Compare the compiled and pure-Python field kernels, then time curve operations.

    python3 benchmarks/compare_kernels.py [--fields 163,233,283,409,571] [--iters 2000]

The first table is ns per field operation for each backend.  The second
shows, per model and operation, the metered cost (deterministic) next to the
median wall-clock time with the default backend (noisy).
"""

import argparse

from binform import Field
from binform.bench import kernel_bench, op_bench

ROWS = [("z4", "add"), ("z4", "double"), ("mu4", "add"), ("mu4", "double"),
        ("mu4ns", "add"), ("mu4ns", "double"), ("z4", "ladder-step"), ("ws", "add")]


def fmt_meter(meter):
    return " + ".join(f"{v}{k}" for k, v in meter.items()) or "0"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", default="163,233,283,409,571")
    ap.add_argument("--iters", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    degrees = [int(m) for m in args.fields.split(",")]

    print("field kernels (ns/op)")
    print(f"{'m':>5} {'backend':>8} {'mul':>10} {'sqr':>10} {'inv':>10}")
    for m in degrees:
        for name, row in kernel_bench(m, args.iters, args.seed).items():
            print(f"{m:>5} {name:>8} {row['mul']:>10.0f} {row['sqr']:>10.0f} {row['inv']:>10.0f}")

    print("\ncurve operations")
    print(f"{'m':>5} {'model':>6} {'op':>12} {'meter':>28} {'median ns':>12}")
    for m in degrees:
        F = Field(m)
        for model, op in ROWS:
            r = op_bench(F, model, op, max(1, args.iters // 10), args.seed)
            print(f"{m:>5} {model:>6} {op:>12} {fmt_meter(r['meter']):>28} {r['timing']['median_ns']:>12.0f}")


if __name__ == "__main__":
    main()
