#!/usr/bin/env python3
"""Compare the jitted kernels against the pure-interpreter fallback.

The backend is chosen once at import time, so each backend is measured in
its own child process (the fallback child runs with STEINERPOEM_NO_NUMBA=1)
and this parent merges the numbers into one table.  Timings are best-of-N
wall clock with one untimed warmup call, so jit compilation never pollutes
the numbers.

Usage:
    python3 benchmarks/bench_kernels.py [--orders 15 31 63] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _best_of(repeat: int, fn) -> float:
    fn()  # warmup: jit compilation, caches
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_worker(orders: list[int], repeat: int) -> None:
    from steinerpoem import construct_sts, kernels, search_resolvable_sts

    timings: dict[str, float] = {}
    for u in orders:
        timings[f"hill_climb u={u}"] = _best_of(
            repeat, lambda u=u: kernels.hill_climb(u, 1, 10_000_000)
        )

    # exhausting the search on a non-resolvable system is the worst case
    stuck = construct_sts(15).as_array()
    timings["resolve_classes exhaust u=15"] = _best_of(
        repeat, lambda: kernels.resolve_classes(15, stuck, 5_000_000)
    )

    timings["search_resolvable_sts u=15"] = _best_of(
        repeat, lambda: search_resolvable_sts(15, seed=0)
    )

    print(json.dumps({"backend": kernels.BACKEND, "timings": timings}))


def _spawn(disable_numba: bool, orders: list[int], repeat: int) -> dict:
    env = dict(os.environ)
    env["STEINERPOEM_NO_NUMBA"] = "1" if disable_numba else ""
    argv = [
        sys.executable,
        os.path.abspath(__file__),
        "--worker",
        "--repeat",
        str(repeat),
        "--orders",
        *[str(u) for u in orders],
    ]
    out = subprocess.run(
        argv, env=env, check=True, capture_output=True, text=True
    )
    return json.loads(out.stdout)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", type=int, nargs="+", default=[15, 31, 63])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.worker:
        run_worker(args.orders, args.repeat)
        return 0

    fast = _spawn(False, args.orders, args.repeat)
    slow = _spawn(True, args.orders, args.repeat)
    if fast["backend"] == slow["backend"]:
        print(
            f"warning: both children ran the {fast['backend']} backend; "
            f"is numba importable?",
            file=sys.stderr,
        )

    width = max(len(name) for name in fast["timings"])
    print(f"{'task'.ljust(width)}  {fast['backend']:>12}  {slow['backend']:>12}  speedup")
    for name, fast_t in fast["timings"].items():
        slow_t = slow["timings"][name]
        ratio = slow_t / fast_t if fast_t > 0 else float("inf")
        print(
            f"{name.ljust(width)}  {fast_t * 1000:>10.2f}ms  "
            f"{slow_t * 1000:>10.2f}ms  {ratio:>6.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
