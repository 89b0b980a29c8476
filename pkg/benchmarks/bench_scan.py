"""Compare the numpy and numba pattern-scan kernels on synthetic corpora.

    python benchmarks/bench_scan.py --sizes 10000 100000 1000000 --repeat 5
"""
import argparse
import time

import numpy as np

from metonym.corpus import _kernels


def synthetic(n_tokens, vocab=5000, seed=0):
    rng = np.random.default_rng(seed)
    tag = rng.choice([_kernels.TAG_N, _kernels.TAG_V, _kernels.TAG_P, _kernels.TAG_O],
                     size=n_tokens, p=[0.45, 0.15, 0.35, 0.05]).astype(np.int64)
    part = np.where(tag == _kernels.TAG_P, rng.integers(0, 9, n_tokens), -1).astype(np.int64)
    surf = rng.integers(0, vocab, n_tokens).astype(np.int64)
    sent = np.cumsum(rng.random(n_tokens) < 1 / 12).astype(np.int64)
    return surf, tag, part, sent


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000, 1_000_000])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if _kernels.scan_numba is None:
        raise SystemExit("numba is not installed")
    t0 = time.perf_counter()
    _kernels.scan_numba(*synthetic(100))
    print(f"numba first call (compile or cache load): {time.perf_counter() - t0:.3f}s")

    print(f"{'tokens':>10} {'numpy s':>10} {'numba s':>10} {'speedup':>8}  matches")
    for n in args.sizes:
        data = synthetic(n)
        t_np, out_np = best_of(_kernels.scan_numpy, data, args.repeat)
        t_nb, out_nb = best_of(_kernels.scan_numba, data, args.repeat)
        for a, b in zip(out_np, out_nb):
            np.testing.assert_array_equal(a, b)
        total = sum(len(a) for a in out_np)
        print(f"{n:>10} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.2f}  {total}")


if __name__ == "__main__":
    main()
