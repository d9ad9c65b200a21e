"""Compare the compiled and pure-Python kernels on the workloads the counts use.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import timeit

from lincount import _kernels_py
from lincount.partitions import BoxShape


def _workloads(k):
    box = BoxShape(4, 6)
    parts = [tuple(p) for p in box.partitions() if 3 <= p.size <= 8]

    def lr_all_pairs():
        for lam in parts[::3]:
            for mu in parts[::5]:
                k.lr_coefficients(lam, mu, box.rows, box.cols)

    def lr_to_full_box():
        full = (6, 6, 6, 6)
        for lam in box.partitions(12):
            k.lr_coefficient(tuple(lam), (6, 6), full, 4, 6)

    def strips():
        for lam in parts:
            for a in range(4):
                k.horizontal_strips(lam, a, 4, 6)
                k.vertical_strips(lam, a, 4, 6)

    def fillings():
        k.count_fillings(8, 2, 8)
        k.count_fillings(6, 3, 6)

    return {
        "LR products, 4x6 box": lr_all_pairs,
        "LR coefficient to full box": lr_to_full_box,
        "Pieri strips": strips,
        "grid fillings (8,2) + (6,3)": fillings,
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = {"python": _kernels_py}
    try:
        backends["cython"] = importlib.import_module("lincount._ckernels")
    except ImportError:
        print("compiled kernels not built; timing the pure-Python backend only")

    timings = {}
    for name, module in backends.items():
        for label, fn in _workloads(module).items():
            fn()  # warm up caches
            timings[label, name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    labels = list(_workloads(_kernels_py))
    width = max(map(len, labels))
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for label in labels:
        py = timings[label, "python"]
        row = f"{label:<{width}}  {py * 1e3:>8.2f}ms"
        if (label, "cython") in timings:
            cy = timings[label, "cython"]
            row += f"  {cy * 1e3:>8.2f}ms  {py / cy:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
