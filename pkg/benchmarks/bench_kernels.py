"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]

Compilation happens once before timing (and is cached on disk afterwards).
The eigenvalue rows also show numpy.linalg.eigvals (LAPACK) for scale.
"""
import argparse
import time

import numpy as np

from bicomplex import kernels
from bicomplex._accel import USE_NUMBA, numba


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if numba is None:
        print("numba is not installed; only the numpy column is meaningful")
    print(f"default backend: {'numba' if USE_NUMBA else 'numpy'}")

    rng = np.random.default_rng(args.seed)
    N = args.size
    z, w, u, v = (rng.standard_normal(N) + 1j * rng.standard_normal(N) for _ in range(4))
    z1, z2 = kernels.to_idempotent_np(z, w)
    u1, u2 = kernels.to_idempotent_np(u, v)

    batch = [
        ("cartesian_mul", kernels.cartesian_mul_np, kernels.cartesian_mul_nb, (z, w, u, v)),
        ("to_idempotent", kernels.to_idempotent_np, kernels.to_idempotent_nb, (z, w)),
        ("from_idempotent", kernels.from_idempotent_np, kernels.from_idempotent_nb, (z1, z2)),
        ("idempotent_mul", kernels.idempotent_mul_np, kernels.idempotent_mul_nb, (z1, z2, u1, u2)),
    ]
    print(f"\nbatch kernels, {N} elements, best of {args.repeat}")
    print(f"{'kernel':<18}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}")
    for name, f_np, f_nb, arrs in batch:
        small = tuple(a[:8] for a in arrs)
        f_nb(*small)
        ref = f_np(*arrs)
        got = f_nb(*arrs)
        assert all(np.allclose(r, g) for r, g in zip(ref, got)), name
        t_np = best_of(lambda: f_np(*arrs), args.repeat)
        t_nb = best_of(lambda: f_nb(*arrs), args.repeat)
        print(f"{name:<18}{1e3 * t_np:>10.2f}{1e3 * t_nb:>10.2f}{t_np / t_nb:>8.1f}x")

    print(f"\nQR eigenvalues, 200 matrices per size, best of {args.repeat}")
    print(f"{'n':<6}{'python ms':>11}{'numba ms':>10}{'lapack ms':>11}{'speedup':>9}")
    kernels.qr_eigvals_nb(np.eye(2, dtype=np.complex128), 1000)
    for n in (2, 4, 8, 16):
        mats = [np.ascontiguousarray(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
                for _ in range(200)]
        cap = 500 * n
        t_np = best_of(lambda: [kernels.qr_eigvals_np(A.copy(), cap) for A in mats], max(1, args.repeat // 2))
        t_nb = best_of(lambda: [kernels.qr_eigvals_nb(A.copy(), cap) for A in mats], args.repeat)
        t_la = best_of(lambda: [np.linalg.eigvals(A) for A in mats], args.repeat)
        print(f"{n:<6}{1e3 * t_np:>11.1f}{1e3 * t_nb:>10.1f}{1e3 * t_la:>11.1f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
