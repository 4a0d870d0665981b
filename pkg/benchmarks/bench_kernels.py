"""Benchmark the compiled kernels against the pure-Python fallback.

Times the hot operations on both backends and prints the speedups:
curvature scans, Booth least rotation, the palindrome test, the
canonical-word enumeration, and an end-to-end survey.

Usage: python benchmarks/bench_kernels.py [--max-length 13]
"""
from __future__ import annotations

import argparse
import random
import time

from wordcurv import _kernels_py

try:
    from wordcurv import _kernels
except ImportError:
    _kernels = None


def timed(fn, *args, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_row(name, pure_fn, fast_fn, *args, repeat=3):
    t_pure, out_pure = timed(pure_fn, *args, repeat=repeat)
    if fast_fn is None:
        print(f"{name:<38} {t_pure * 1e3:>10.2f} ms {'-':>12} {'-':>8}")
        return
    t_fast, out_fast = timed(fast_fn, *args, repeat=repeat)
    assert out_pure == out_fast, f"{name}: backends disagree"
    speedup = t_pure / t_fast if t_fast else float("inf")
    print(f"{name:<38} {t_pure * 1e3:>10.2f} ms {t_fast * 1e3:>9.2f} ms {speedup:>7.1f}x")


def batch(fn, words):
    def run():
        return [fn(w) for w in words]

    return run


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=13,
                        help="enumeration length for the heavy rows")
    args = parser.parse_args()
    L = args.max_length

    rng = random.Random(7)
    words_small = []
    while len(words_small) < 20000:
        w = bytes(rng.randrange(3) for _ in range(rng.randint(6, 24)))
        if 0 in w and 1 in w and 2 in w:
            words_small.append(w)
    words_long = []
    while len(words_long) < 200:
        w = bytes(rng.randrange(3) for _ in range(800))
        if 0 in w and 1 in w and 2 in w:
            words_long.append(w)

    print(f"{'operation':<38} {'pure':>13} {'cython':>12} {'speedup':>8}")
    fast = _kernels
    bench_row("curv_terms, 20k words len 6..24",
              batch(_kernels_py.curv_terms, words_small),
              batch(fast.curv_terms, words_small) if fast else None)
    bench_row("curv_terms, 200 words len 800",
              batch(_kernels_py.curv_terms, words_long),
              batch(fast.curv_terms, words_long) if fast else None)
    bench_row("least_rotation, 20k words",
              batch(_kernels_py.least_rotation, words_small),
              batch(fast.least_rotation, words_small) if fast else None)
    bench_row("cyclic_palindrome, 20k words",
              batch(_kernels_py.cyclic_palindrome, words_small),
              batch(fast.cyclic_palindrome, words_small) if fast else None)
    bench_row(f"canonical_words(L={L}, 3 chars)",
              lambda: _kernels_py.canonical_words(L, 3),
              (lambda: fast.canonical_words(L, 3)) if fast else None,
              repeat=1)

    def survey_with(kernels):
        def run():
            out = {}
            for length in range(3, L + 1):
                for w in kernels.canonical_words(length, 3):
                    num, den = kernels.curv_terms(w)
                    out[(num, den)] = out.get((num, den), 0) + 1
            return out

        return run

    bench_row(f"survey lengths 3..{L}",
              survey_with(_kernels_py),
              survey_with(fast) if fast else None, repeat=1)
    if fast is None:
        print("\ncompiled backend not built; only the pure fallback was timed")


if __name__ == "__main__":
    main()
