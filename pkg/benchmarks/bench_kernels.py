"""Compare the compiled and pure-Python series kernels.

    python benchmarks/bench_kernels.py [--order N] [--repeat R]

Workloads: inverting (2 sin(lambda/2))^2 and squaring a dense rational series
at high lambda order, plus an uncached all-genus round trip.
"""
import argparse
import importlib
import random
import timeit

from gvlocal import _pykernels, series, transform
from gvlocal.series import LambdaSeries, two_sin_half


def kernel_workloads(kern, order):
    s = two_sin_half(1, order + 3)
    sq = series.series_mul(s, s)
    nums_sq = list(sq.nums)
    rng = random.Random(0)
    dense = [rng.randrange(-10**12, 10**12) for _ in range(order)]
    return {
        "invert (2 sin)^2": lambda: kern.invert(nums_sq, order),
        "convolve dense^2": lambda: kern.convolve(dense, dense, order),
    }


def round_trip(kern, genus_cap):
    """Clear the kernel caches and run gv -> gw -> gv with ``kern`` as backend."""
    def run():
        series._kern = kern
        series.gv_kernel.cache_clear()
        transform._kernel_column.cache_clear()
        gv = transform.InvariantTable("gv", transform.DegreeFunctional((1, 1)), 12, genus_cap)
        for a in range(0, 7):
            for b in range(0, 7):
                if a or b:
                    gv.set((a, b), (a + b) % (genus_cap + 1), a - b)
        assert transform.gv_from_gw_all_genus(transform.gw_from_gv(gv)) == gv
    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--genus-cap", type=int, default=12)
    args = ap.parse_args()
    try:
        ckern = importlib.import_module("gvlocal._ckernels")
    except ImportError:
        print("compiled kernels not built; only the Python fallback is available")
        ckern = None
    backends = {"python": _pykernels}
    if ckern is not None:
        backends["cython"] = ckern
    original = series._kern

    rows = {}
    for name, kern in backends.items():
        work = kernel_workloads(kern, args.order)
        work[f"round trip (genus_cap={args.genus_cap})"] = round_trip(kern, args.genus_cap)
        for label, fn in work.items():
            rows.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    series._kern = original

    print(f"{'workload':34s} " + " ".join(f"{b:>12s}" for b in backends) + "     speedup")
    for label, times in rows.items():
        cells = " ".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        speed = f"{times['python'] / times['cython']:8.2f}x" if "cython" in times else ""
        print(f"{label:34s} {cells} {speed}")


if __name__ == "__main__":
    main()
