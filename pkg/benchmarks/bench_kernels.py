"""Compare the Cython and numpy layout kernels on MNIST-sized shapes.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Checks that both backends agree, then prints the median wall time of each
kernel and the speedup of the compiled one.
"""
import argparse
import statistics
import sys
import timeit

import numpy as np

from labelhyp import _pykernels

try:
    from labelhyp import _ckernels
except ImportError:
    _ckernels = None

# (name, input shape, kernel, stride, padding) for the conv layers of the models
CONV_CASES = [
    ("conv1 28x28", (250, 1, 28, 28), 4, 2, 1),
    ("conv2 14x14", (250, 32, 14, 14), 4, 2, 1),
    ("lenet conv 28x28", (250, 1, 28, 28), 5, 1, 0),
]
POOL_CASES = [("pool 24x24", (250, 6, 24, 24), 2)]


def _time(fn, repeat):
    return statistics.median(timeit.repeat(fn, number=1, repeat=repeat))


def _cases(rng):
    for name, shape, k, s, p in CONV_CASES:
        x = rng.normal(size=shape)
        cols = _pykernels.im2col(x, k, k, s, p)
        yield f"im2col {name}", lambda b, x=x, k=k, s=s, p=p: b.im2col(x, k, k, s, p)
        yield f"col2im {name}", lambda b, c=cols, sh=shape, k=k, s=s, p=p: b.col2im(c, sh, k, k, s, p)
    for name, shape, k in POOL_CASES:
        x = rng.normal(size=shape)
        out, arg = _pykernels.maxpool2d_forward(x, k)
        g = rng.normal(size=out.shape)
        yield f"pool fwd {name}", lambda b, x=x, k=k: b.maxpool2d_forward(x, k)
        yield f"pool bwd {name}", lambda b, g=g, a=arg, sh=shape, k=k: b.maxpool2d_backward(g, a, sh, k)


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.allclose(a, b, rtol=0, atol=1e-12)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install --no-build-isolation -e .` first")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}{'numpy ms':>10}{'cython ms':>11}{'speedup':>9}")
    for name, fn in _cases(rng):
        if not _same(fn(_pykernels), fn(_ckernels)):
            print(f"{name}: backends disagree")
            return 1
        py = _time(lambda: fn(_pykernels), args.repeat) * 1e3
        cy = _time(lambda: fn(_ckernels), args.repeat) * 1e3
        print(f"{name:<28}{py:>10.2f}{cy:>11.2f}{py / cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
