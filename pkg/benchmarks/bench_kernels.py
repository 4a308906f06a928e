"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best time of each implementation and
the speedup.  Both implementations are also checked to agree on every input.
"""

import argparse
import random
import timeit

from injspec import _kernels
from injspec.catalog import algebra
from injspec.findim.algebra import direct_sum, regular_rep


def _inputs(seed=0):
    rng = random.Random(seed)
    mats = [tuple(tuple(rng.randrange(p) for _ in range(24)) for _ in range(20)) for p in (2, 3, 5)]
    t3 = algebra("T3(F_2)")
    reg = regular_rep(t3)
    mod = direct_sum(reg, reg)  # dim 12 over F_2: 4095 cyclic generators
    m2 = algebra("M2(F_2)")
    return {
        "rref 20x24": [(lambda impl, m=m, p=p: impl.rref(m, 24, p)) for m, p in zip(mats, (2, 3, 5))],
        "cyclic_subspaces T3 regular^2": [lambda impl: impl.cyclic_subspaces(mod.action, mod.dim, 2)],
        "idempotents T3(F_2)": [lambda impl: impl.idempotents(t3.mult, t3.dim, 2)],
        "idempotents M2(F_2)": [lambda impl: impl.idempotents(m2.mult, m2.dim, 2)],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    py, c = _kernels.python_impl, _kernels.compiled_impl
    if c is None:
        print("compiled kernels unavailable; only the pure-Python timings are shown")
    print(f"{'kernel':34s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, calls in _inputs().items():
        def run(impl, calls=calls):
            return [f(impl) for f in calls]

        t_py = min(timeit.repeat(lambda: run(py), number=1, repeat=args.repeat))
        if c is None:
            print(f"{name:34s} {t_py:10.4f} {'-':>10s} {'-':>8s}")
            continue
        if run(py) != run(c):
            raise SystemExit(f"{name}: implementations disagree")
        t_c = min(timeit.repeat(lambda: run(c), number=1, repeat=args.repeat))
        print(f"{name:34s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
