#!/usr/bin/env python3
"""Benchmark the compiled root kernels against the numpy fallback.

The batched secular-root power sums dominate the runtime of the direct
spectral oracles (millions of Newton solves per sum), so this is the hot
path worth compiling.  Run after an editable install:

    python benchmarks/bench_kernels.py --count 1000000 --repeats 3
"""

from __future__ import annotations

import argparse
import time

from nlbvp._kernels import backend_name, fallback

try:
    from nlbvp._kernels import _speedups as compiled
except ImportError:
    compiled = None


def _best(fn, repeats: int) -> tuple[float, float]:
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1_000_000, help="number of roots per sum")
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats, best taken")
    args = parser.parse_args()

    cases = [
        ("cot_root_power_sum(M, 2)", "cot_root_power_sum", (args.count, 2)),
        ("cot_root_power_sum(M, 4)", "cot_root_power_sum", (args.count, 4)),
        ("tan_root_power_sum(M, 2)", "tan_root_power_sum", (args.count, 2)),
    ]

    print(f"selected backend at import: {backend_name()}")
    print(f"count = {args.count}, repeats = {args.repeats} (best shown)")
    print(f"{'case':32s} {'fallback':>12s} {'compiled':>12s} {'speedup':>9s}")
    for label, name, call_args in cases:
        t_fb, v_fb = _best(lambda: getattr(fallback, name)(*call_args), args.repeats)
        if compiled is None:
            print(f"{label:32s} {t_fb:10.3f} s {'n/a':>12s} {'n/a':>9s}")
            continue
        t_c, v_c = _best(lambda: getattr(compiled, name)(*call_args), args.repeats)
        rel = abs(v_fb - v_c) / max(abs(v_fb), 1e-300)
        print(f"{label:32s} {t_fb:10.3f} s {t_c:10.3f} s {t_fb / t_c:8.1f}x   (rel diff {rel:.1e})")


if __name__ == "__main__":
    main()
