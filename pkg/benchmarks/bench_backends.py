"""Time the enumeration kernels under both backends.

Backend selection happens at import time, so each backend runs in its
own subprocess with RELPRIME_BACKEND set; this parent just collects and
tabulates the timings.

Run:  python3 benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys

WORKLOADS = [
    ("moebius sieve to 10^6", "sieve"),
    ("subset histogram, |X| = 20", "subsets"),
    ("ordered 4-tuples over [1,55]", "tuples"),
]

WORKER = r"""
import json
import sys
import time

import numpy as np

from relprime import _kernels

def run(name):
    if name == "sieve":
        _kernels.moebius_values(1000)  # warm the jit before timing
        start = time.perf_counter()
        table = _kernels.moebius_values(10**6)
        elapsed = time.perf_counter() - start
        checksum = int(np.sum(table[1:].astype(np.int64)))
    elif name == "subsets":
        elements = np.arange(4, 24, dtype=np.int64) * 3
        _kernels.subset_gcd_counts(elements[:4], 0)
        start = time.perf_counter()
        counts = _kernels.subset_gcd_counts(elements, 2)
        elapsed = time.perf_counter() - start
        checksum = int(np.sum(counts))
    else:
        _kernels.tuple_gcd_count(5, 2, 0, _kernels.ORDERED)
        start = time.perf_counter()
        checksum = int(_kernels.tuple_gcd_count(55, 4, 0, _kernels.ORDERED))
        elapsed = time.perf_counter() - start
    return elapsed, checksum

name = sys.argv[1]
elapsed, checksum = run(name)
print(json.dumps({"backend": _kernels.BACKEND, "elapsed": elapsed, "checksum": checksum}))
"""


def measure(backend, workload):
    env = dict(os.environ, RELPRIME_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, workload],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(proc.stdout.splitlines()[-1])


def main():
    print(f"{'workload':<32} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for label, key in WORKLOADS:
        jit = measure("numba", key)
        plain = measure("numpy", key)
        if jit["checksum"] != plain["checksum"]:
            raise SystemExit(
                f"backends disagree on {label}: "
                f"{jit['checksum']} vs {plain['checksum']}"
            )
        ratio = plain["elapsed"] / jit["elapsed"] if jit["elapsed"] else float("inf")
        print(
            f"{label:<32} {jit['elapsed']:>9.4f}s {plain['elapsed']:>9.4f}s "
            f"{ratio:>8.1f}x"
        )
    print("(identical checksums; speedup is numpy time over numba time)")


if __name__ == "__main__":
    main()
