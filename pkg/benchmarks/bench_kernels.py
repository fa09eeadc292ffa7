"""Compare the compiled and pure-Python kernels on representative inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from toric_seshadri import _pykernels
from toric_seshadri.kernels import BACKEND

try:
    from toric_seshadri import _ckernels
except ImportError:
    _ckernels = None


def adjacency_case(seed=0, nrays=60, nbits=40):
    rng = random.Random(seed)
    masks = [rng.getrandbits(nbits) for _ in range(nrays)]
    idx = list(range(nrays))
    rng.shuffle(idx)
    return idx[: nrays // 2], idx[nrays // 2:], masks


def lattice_case(d=4, size=12):
    # scaled simplex x_i >= 0, sum x_i <= size
    rows = [[int(i == j) for j in range(d)] for i in range(d)] + [[-1] * d]
    rhs = [0] * d + [-size]
    return rows, rhs, [0] * d, [size] * d


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"selected backend: {BACKEND}")
    cases = {"adjacent_pairs": adjacency_case(), "count_lattice_points": lattice_case()}
    for name, case in cases.items():
        py = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: py(*case), number=1, repeat=args.repeat))
        line = f"{name:22s} python {t_py * 1e3:9.2f} ms"
        if _ckernels is not None:
            c = getattr(_ckernels, name)
            assert c(*case) == py(*case), name
            t_c = min(timeit.repeat(lambda: c(*case), number=1, repeat=args.repeat))
            line += f"   cython {t_c * 1e3:9.2f} ms   speedup {t_py / t_c:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
