"""Compare the compiled and pure-Python series kernels.

Runs the same workloads through ``riordan._fastkernels`` and
``riordan._purekernels`` directly (no subprocess games), checks the
results agree, and reports wall-clock ratios.  Workloads mirror the
library's hot paths: convolution, quotient, composition, reversion,
and an end-to-end triangle build through the public API.

Usage:  python benchmarks/bench_kernels.py [--size N] [--repeat K]
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from riordan import RiordanMatrix, Series
from riordan import _fastkernels as fast
from riordan import _purekernels as pure


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _report(label: str, pure_s: float, fast_s: float) -> None:
    ratio = pure_s / fast_s if fast_s else float("inf")
    print(f"{label:<28} pure {pure_s * 1e3:9.2f} ms   "
          f"compiled {fast_s * 1e3:9.2f} ms   {ratio:6.1f}x")


def bench_kernels(size: int, repeat: int) -> None:
    rng = random.Random(20250825)
    a_int = [Fraction(rng.randrange(1, 60)) for _ in range(size)]
    b_int = [Fraction(rng.randrange(1, 60)) for _ in range(size)]
    a_rat = [Fraction(rng.randrange(1, 40), rng.randrange(1, 40))
             for _ in range(size)]
    b_rat = [Fraction(rng.randrange(1, 40), rng.randrange(1, 40))
             for _ in range(size)]
    inner = [Fraction(0), Fraction(1)] + [
        Fraction(rng.randrange(-4, 5)) for _ in range(size - 2)
    ]

    cases = [
        ("mul (integer coeffs)", lambda k: k.mul(a_int, b_int, size)),
        ("mul (rational coeffs)", lambda k: k.mul(a_rat, b_rat, size)),
        ("div", lambda k: k.div(a_int, b_int, size)),
        ("compose", lambda k: k.compose(a_int, inner, size)),
        ("revert", lambda k: k.revert(inner, size)),
    ]
    for label, run in cases:
        want = run(pure)
        got = run(fast)
        assert got == want, f"kernel disagreement in {label}"
        _report(label, _time(lambda: run(pure), repeat),
                _time(lambda: run(fast), repeat))


def bench_triangle(rows: int, repeat: int) -> None:
    """End-to-end: materialize the RNA triangle with either backend."""
    from riordan.bexpansion import rna_series

    g = rna_series(rows)

    def build(kernels):
        from riordan import series as series_mod
        saved = series_mod.kernels
        series_mod.kernels = kernels  # series binds the module at import
        try:
            mat = RiordanMatrix(g, g)
            return mat.triangle()
        finally:
            series_mod.kernels = saved

    assert build(pure) == build(fast)
    _report(f"triangle build ({rows} rows)",
            _time(lambda: build(pure), repeat),
            _time(lambda: build(fast), repeat))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=160)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--rows", type=int, default=60)
    args = parser.parse_args()
    print(f"series length {args.size}, best of {args.repeat}")
    bench_kernels(args.size, args.repeat)
    bench_triangle(args.rows, args.repeat)


if __name__ == "__main__":
    main()
