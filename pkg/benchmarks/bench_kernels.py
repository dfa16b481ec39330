"""Numba vs numpy timings for the numeric kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from qgca.analytic import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--terms", type=int, default=100_000)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        print("numba unavailable; nothing to compare")
        return

    z = np.array([1.0, 1.5, 1.0], dtype=np.complex128)
    cases = {
        "psi_log (M=%d)" % args.terms: (
            lambda: kernels.psi_log_numba(z, 0.999, 0.1 + 0j, args.terms, 1e-12)[0],
            lambda: kernels.psi_log_numpy(z, 0.999, 0.1 + 0j, args.terms, 1e-12)[0],
        ),
        "li2 series (200 terms)": (
            lambda: kernels.li2_series_numba(0.3 + 0.1j, 200),
            lambda: kernels.li2_series_numpy(0.3 + 0.1j, 200),
        ),
        "q-dilog series (200 terms)": (
            lambda: kernels.qdilog_series_numba(0.25 + 0j, 0.6, 200),
            lambda: kernels.qdilog_series_numpy(0.25 + 0j, 0.6, 200),
        ),
    }
    print(f"{'kernel':28s} {'numba':>10s} {'numpy':>10s} {'ratio':>7s}  |diff|")
    for name, (fast, slow) in cases.items():
        fast()  # compile
        tf, vf = best_of(fast, args.repeat)
        ts, vs = best_of(slow, args.repeat)
        print(f"{name:28s} {tf * 1e3:9.3f}ms {ts * 1e3:9.3f}ms {ts / tf:7.1f}  {abs(complex(vf) - complex(vs)):.1e}")


if __name__ == "__main__":
    main()
