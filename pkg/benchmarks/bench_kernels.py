"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints the best-of-N wall time per kernel and backend, plus the speedup.
"""

import argparse
import timeit

import numpy as np

from layerprec import kernels


def cases(rng):
    x_act = rng.normal(0, 4, (100, 20, 24, 24))
    x_img = rng.random((100, 1, 28, 28))
    return {
        "quantize_array 1.2M": lambda m: m.quantize_array(x_act, 4, 6),
        "im2col 5x5 (LeNet conv1)": lambda m: m.im2col(x_img, 5, 5, 1, 1, 0, 0),
        "im2col 3x3 pad 1": lambda m: m.im2col(x_act, 3, 3, 1, 1, 1, 1),
        "max_pool2d 2x2/2": lambda m: m.max_pool2d(x_act, 2, 2, 2, 2, 0, 0),
        "avg_pool2d 3x3/2 pad 1": lambda m: m.avg_pool2d(x_act, 3, 3, 2, 2, 1, 1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    found = kernels.backends()
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(found)}")
    rng = np.random.default_rng(0)
    header = f"{'kernel':28s}" + "".join(f"{name:>12s}" for name in found) + ("   speedup" if len(found) > 1 else "")
    print(header)
    for label, fn in cases(rng).items():
        times = {name: min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for name, mod in found.items()}
        row = f"{label:28s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"   {times['numpy'] / times['cython']:6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
