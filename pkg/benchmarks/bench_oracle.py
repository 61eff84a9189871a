"""Benchmark the compiled DP kernel against the pure-Python fallback.

Runs the full subset DP on a ladder of family instances with both
backends, reports wall times and the speedup, and asserts that the two
backends produce identical counts. Usage:

    python3 benchmarks/bench_oracle.py [--quick]

The --quick flag drops the largest instances so the script finishes in a
couple of seconds (useful as a smoke test).
"""

from __future__ import annotations

import argparse
import importlib
import sys
import time

from walklabel import graphs


def _instances(quick: bool):
    yield "comb (m=4, n=4, k=2)", graphs.comb(4, 4, 2)
    yield "torus (n=8)", graphs.torus(8)
    yield "two cycles (2, 3, 3)", graphs.two_cycles(2, 3, 3)
    yield "perfect tree (h=3, m=2)", graphs.perfect_tree(3, 2)
    if not quick:
        yield "torus (n=10)", graphs.torus(10)
        yield "comb (m=5, n=4, k=2)", graphs.comb(5, 4, 2)
        yield "two cycles (7, 8, 7)", graphs.two_cycles(7, 8, 7)


def _load_backend(name: str):
    return importlib.import_module(f"walklabel.{name}")


def _time_total(kernel, g: graphs.Graph) -> tuple[int, float]:
    start = time.perf_counter()
    value = kernel.dp_total(g.masks, g.n)
    return value, time.perf_counter() - start


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller instance ladder")
    args = parser.parse_args(argv)

    pure = _load_backend("_core_py")
    try:
        compiled = _load_backend("_core")
    except ImportError:
        print("compiled kernel not available; nothing to compare", file=sys.stderr)
        return 1

    header = f"{'instance':<28} {'n':>3} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, g in _instances(args.quick):
        value_pure, t_pure = _time_total(pure, g)
        value_comp, t_comp = _time_total(compiled, g)
        assert value_pure == value_comp, (
            f"backend mismatch on {label}: {value_pure} != {value_comp}"
        )
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{label:<28} {g.n:>3} {t_pure:>10.4f} {t_comp:>13.4f} {speedup:>7.1f}x")
    print("all counts identical across backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
