"""Compare the compiled enumeration kernels against the pure-Python twins.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--sizes 14 16 18 20]

Both backends walk the identical Gray-code order, so besides timing each
size the script asserts that results are bit-identical.
"""

import argparse
import time

from discut import _kernels_py, kernels
from discut.graph import gen_gnp


def _masks(g):
    out = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    inn = [sum(1 << w for w in g.in_adj[v]) for v in range(g.n)]
    return out, inn


def _time(fn, repeats=3):
    best = min(_timed_once(fn) for _ in range(repeats))
    return best


def _timed_once(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[12, 14, 16, 18, 20])
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if kernels.BACKEND == "python":
        print("note: compiled backend unavailable; comparing python to itself")

    header = f"{'n':>4} {'problem':>8} {'python (s)':>12} {'ext (s)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        gu = gen_gnp(n, args.p, args.seed)
        gd = gen_gnp(n, args.p, args.seed, directed=True)
        out_u, _ = _masks(gu)
        out_d, in_d = _masks(gd)

        res_py = _kernels_py.maxcut_bruteforce(out_u, n)
        res_ext = kernels.maxcut_bruteforce(out_u, n)
        assert res_py == res_ext, "backend mismatch on maxcut"
        t_py = _time(lambda: _kernels_py.maxcut_bruteforce(out_u, n))
        t_ext = _time(lambda: kernels.maxcut_bruteforce(out_u, n))
        print(f"{n:>4} {'maxcut':>8} {t_py:>12.4f} {t_ext:>12.4f} "
              f"{t_py / t_ext:>7.1f}x")

        res_py = _kernels_py.maxdicut_bruteforce(out_d, in_d, n)
        res_ext = kernels.maxdicut_bruteforce(out_d, in_d, n)
        assert res_py == res_ext, "backend mismatch on maxdicut"
        t_py = _time(lambda: _kernels_py.maxdicut_bruteforce(out_d, in_d, n))
        t_ext = _time(lambda: kernels.maxdicut_bruteforce(out_d, in_d, n))
        print(f"{n:>4} {'maxdicut':>8} {t_py:>12.4f} {t_ext:>12.4f} "
              f"{t_py / t_ext:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
