"""Compare the numba and pure-numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is called once per backend before timing so numba compilation
is excluded; results are checked equal across backends.
"""

import argparse
import time

import numpy as np

from genfoulkes import _kernels


def best_of(func, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = func()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--table-sizes", type=int, nargs="+", default=[12, 14, 16, 18])
    parser.add_argument("--cube-sizes", type=int, nargs="+", default=[8, 9, 10])
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    cases = [("mn_table", n, _kernels.mn_table) for n in args.table_sizes]
    cases += [("kronecker_cube", n, _kernels.kronecker_cube) for n in args.cube_sizes]
    print(f"{'kernel':<16}{'n':>4}{'numba (s)':>12}{'numpy (s)':>12}{'speedup':>10}")
    for name, n, kernel in cases:
        _kernels.mn_transitions(n)
        kernel(n, backend="numba")
        kernel(n, backend="numpy")
        t_nb, r_nb = best_of(lambda: kernel(n, backend="numba"), args.repeat)
        t_np, r_np = best_of(lambda: kernel(n, backend="numpy"), args.repeat)
        if not np.array_equal(r_nb, r_np):
            raise SystemExit(f"{name}({n}): backends disagree")
        print(f"{name:<16}{n:>4}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
