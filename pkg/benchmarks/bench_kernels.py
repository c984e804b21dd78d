"""Compare the Cython and numpy evaluation kernels.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

Both backends evaluate the same random exponential polynomials on the same
points; the script checks that they agree before reporting timings.
"""
import argparse
import timeit

import numpy as np

from fermat_pdde.expcore import ExpPoly
from fermat_pdde.expcore.kernels import get_backend
from fermat_pdde.pdde import sample_polydisc
from fermat_pdde.testing import random_exppoly, random_polynomial


def workloads(rng, dim):
    yield "small exppoly", random_exppoly(rng, dim)
    raw = [(random_polynomial(rng, dim, 8, 4), random_polynomial(rng, dim, 6, 3, 0.5)) for _ in range(12)]
    yield "12 terms, deg 4 coeffs", ExpPoly(dim, raw)
    p = random_polynomial(rng, dim, 40, 8)
    yield "40-term polynomial", ExpPoly.from_polynomial(p)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--dim", type=int, default=3)
    args = ap.parse_args(argv)

    try:
        cy = get_backend("cython")
    except ImportError:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    py = get_backend("python")
    rng = np.random.default_rng(0)
    pts = sample_polydisc(rng, args.points, args.dim, 1.0)

    print(f"{args.points} points, dim {args.dim}, best of {args.repeat}")
    print(f"{'workload':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, f in workloads(rng, args.dim):
        flat = f.flat()
        v_py, m_py = py.exppoly_eval_batch(*flat, pts)
        v_cy, m_cy = cy.exppoly_eval_batch(*flat, pts)
        scale = max(1.0, float(np.max(np.abs(v_py))))
        assert np.max(np.abs(v_py - v_cy)) <= 1e-12 * scale, name
        assert np.allclose(m_py, m_cy)
        t_py = min(timeit.repeat(lambda: py.exppoly_eval_batch(*flat, pts), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: cy.exppoly_eval_batch(*flat, pts), number=1, repeat=args.repeat))
        print(f"{name:<26}{t_py * 1e3:>12.2f}{t_cy * 1e3:>12.2f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
