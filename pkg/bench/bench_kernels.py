"""Time the compiled table scans against the pure-Python fallback.

    python bench/bench_kernels.py [--sizes 8 16 32] [--repeat 3]

Each row times one scan on the same inputs with both backends and checks that
their outputs agree.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from twocat import _kernels_py
from twocat.core2 import cyclic_group, delooping, delooping_with_2cells
from twocat.pseudo import identity_pseudofunctor, relative_center

try:
    from twocat import _kernels as compiled
except ImportError:
    compiled = None


def scan_cases(size):
    B = delooping_with_2cells(cyclic_group(size), cyclic_group(2))
    h1, vc, h2 = B.dense()
    yield "vertical category", "category_violations", (B.src2, B.tgt2, vc, B.id2)
    yield "horizontal 2-cells", "horizontal_violations", (B.src1, B.tgt1, h1, B.unit1, B.src2, B.tgt2, h2, vc, B.id2)
    yield "2-cell inverses", "inverse_table", (B.src2, B.tgt2, vc, B.id2)
    M = relative_center(identity_pseudofunctor(delooping(cyclic_group(size))))
    C = M.cat
    n, m = C.n_objects, C.n_morphisms
    t_obj = np.full((n, n), -1, dtype=np.int32)
    t_mor = np.full((m, m), -1, dtype=np.int32)
    for (i, j), k in M.tensor_obj.items():
        t_obj[i, j] = k
    for (a, b), k in M.tensor_mor.items():
        t_mor[a, b] = k
    yield "monoidal center", "monoidal_violations", (C.src, C.tgt, C.dense(), C.identity, t_obj, t_mor, M.unit)


def normalized(found):
    return [tuple(int(v) for v in np.ravel(item[1])) + (int(item[0]),) if isinstance(item, tuple) else int(item)
            for item in found]


def best_time(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if compiled is None:
        parser.exit(1, "compiled kernels are not built; run pip install -e . --no-build-isolation\n")

    print(f"{'scan':<20} {'n':>4} {'python ms':>11} {'compiled ms':>12} {'speedup':>8}  agree")
    for size in args.sizes:
        for label, func, inputs in scan_cases(size):
            slow_fn, fast_fn = getattr(_kernels_py, func), getattr(compiled, func)
            agree = normalized(slow_fn(*inputs)) == normalized(fast_fn(*inputs))
            slow = best_time(slow_fn, inputs, args.repeat) * 1000
            fast = best_time(fast_fn, inputs, args.repeat) * 1000
            print(f"{label:<20} {size:>4} {slow:>11.2f} {fast:>12.3f} {slow / max(fast, 1e-9):>7.0f}x  {agree}")


if __name__ == "__main__":
    main()
