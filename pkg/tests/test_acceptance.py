"""Acceptance criteria 1-12.

Each criterion returns ``(passed, detail)``; the pytest wrappers assert on
it and the terminal summary (see conftest) prints one line per criterion.
Run ``python3 -m tests.test_acceptance`` to get the same lines without pytest.
"""
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from bicomplex import (
    E1, E2, ONE, ZERO, Bicomplex, NotInvertible, inverse, is_invertible, is_zero,
    is_zero_divisor, leq_prime, norm_d,
)
from bicomplex import kernels
from bicomplex.algebras import (
    DivisionAlgebraElem, PointwiseAlgebra, brute_force_maximal_oracle, division_spectrum,
    in_division_spectrum_direct, maximal_ideals,
)
from bicomplex.cli import DEMOS
from bicomplex.linalg import (
    BCMatrix, BCVector, approx_point_spectrum, kernel_bc, operator_norm_d, point_spectrum,
    sigma_p_not_in_ap_demo, smallest_singular_value, spectral_norm,
)
from bicomplex.ring import (
    BCIdeal, in_ideal, invertible_inside_ideal_demo, kernel_not_maximal_demo, quotient_is_field,
)

ROOT = Path(__file__).resolve().parent.parent
FIXTURE = ROOT / "fixtures" / "diag.json"
TAU_EIG = 1e-8

RESULTS = {}
TITLES = {}


def criterion(num, title):
    def wrap(fn):
        TITLES[num] = title

        def runner():
            try:
                ok, detail = fn()
            except Exception as exc:  # recorded, then re-raised for pytest
                RESULTS[num] = (False, f"{type(exc).__name__}: {exc}")
                raise
            RESULTS[num] = (bool(ok), detail)
            return ok, detail

        runner.num = num
        runner.__name__ = fn.__name__
        return runner
    return wrap


def summary_lines():
    out = []
    for num in sorted(TITLES):
        if num not in RESULTS:
            continue
        ok, detail = RESULTS[num]
        out.append(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {TITLES[num]}: {detail}")
    return out


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


# ---------------------------------------------------------------- criteria


@criterion(1, "Cartesian vs idempotent multiplication, 1e4 pairs, 1e-12 rel, < 1 s")
def c01_arithmetic():
    rng = np.random.default_rng(101)
    N = 10_000
    z, w, u, v = (crandn(rng, N) for _ in range(4))
    # compile / warm caches outside the timed region
    kernels.cartesian_mul(z[:4], w[:4], u[:4], v[:4])
    kernels.idempotent_mul(*kernels.to_idempotent(z[:4], w[:4]), *kernels.to_idempotent(u[:4], v[:4]))
    kernels.from_idempotent(z[:4], w[:4])

    t0 = time.perf_counter()
    pz, pw = kernels.cartesian_mul(z, w, u, v)
    q1, q2 = kernels.idempotent_mul(*kernels.to_idempotent(z, w), *kernels.to_idempotent(u, v))
    qz, qw = kernels.from_idempotent(q1, q2)
    # scalar class path on the same pairs
    worst_obj = 0.0
    for k in range(N):
        a, b = Bicomplex(z[k], w[k]), Bicomplex(u[k], v[k])
        ab = a * b
        via = Bicomplex.from_idempotent(a.z1 * b.z1, a.z2 * b.z2)
        worst_obj = max(worst_obj, (ab - via).modulus() / max(a.modulus() * b.modulus(), 1e-300))
    elapsed = time.perf_counter() - t0

    scale = np.hypot(np.abs(z), np.abs(w)) * np.hypot(np.abs(u), np.abs(v))
    diff = np.hypot(np.abs(pz - qz), np.abs(pw - qw))
    worst = float(np.max(diff / scale))
    worst = max(worst, worst_obj)
    ok = worst <= 1e-12 and elapsed < 1.0
    return ok, f"max rel diff {worst:.2e}, {elapsed:.3f} s"


@criterion(2, "trichotomy on 1e4 random + crafted values; inverse residual 1e-11")
def c02_trichotomy():
    rng = np.random.default_rng(102)
    values = [Bicomplex.from_basis(*row) for row in rng.standard_normal((10_000, 4))]
    crafted = [ZERO, E1, E2, 5 * Bicomplex(1, -1j), Bicomplex(1, 1j), E1 * (3 - 2j), E2 * 1e8]
    crafted += [Bicomplex.from_idempotent(0, complex(*rng.standard_normal(2))) for _ in range(50)]
    crafted += [Bicomplex.from_idempotent(complex(*rng.standard_normal(2)), 0) for _ in range(50)]
    bad = 0
    worst_inv = 0.0
    counts = {"invertible": 0, "zero divisor": 0, "zero": 0}
    for Z in values + crafted:
        flags = (is_invertible(Z), is_zero_divisor(Z), is_zero(Z))
        if sum(flags) != 1:
            bad += 1
            continue
        counts[("invertible", "zero divisor", "zero")[flags.index(True)]] += 1
        if flags[0]:
            worst_inv = max(worst_inv, (inverse(Z) * Z - ONE).modulus())
        else:
            try:
                inverse(Z)
                bad += 1
            except NotInvertible:
                pass
    expected_special = counts["zero divisor"] == len(crafted) - 1 and counts["zero"] == 1
    ok = bad == 0 and worst_inv <= 1e-11 and expected_special
    return ok, f"{bad} violations, counts {counts}, max |Z^-1 Z - 1| {worst_inv:.2e}"


@criterion(3, "quotients by I1, I2 are fields on 1e3 cosets; zero-ideal control fails at e1")
def c03_quotient_field():
    rng = np.random.default_rng(103)
    r1 = quotient_is_field(BCIdeal.I1, 1000, rng)
    r2 = quotient_is_field(BCIdeal.I2, 1000, rng)
    r0 = quotient_is_field(BCIdeal.ZERO, 1000, rng)
    ok = bool(r1) and bool(r2) and not r0 and r0.witness == E1
    return ok, (f"I1 {bool(r1)} (res {r1.max_residual:.1e}), I2 {bool(r2)} (res {r2.max_residual:.1e}), "
                f"zero ideal {bool(r0)} witness {r0.witness}")


@criterion(4, "kernel of the identity functional is {0}, strictly inside I1")
def c04_kernel_not_maximal():
    rep = kernel_not_maximal_demo()
    w = rep.witnesses[0]
    ok = (rep.passed and w["kernel"] == "zero" and w["superset"] == "I1"
          and in_ideal(w["element"], BCIdeal.I1) and not is_zero(w["element"]))
    return ok, f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks pass"


@criterion(5, "100 random e1 z1: Z W = e1 within 1e-11 and Z not invertible in BC")
def c05_invertible_in_ideal():
    rng = np.random.default_rng(105)
    worst = 0.0
    fails = 0
    for _ in range(100):
        z1 = complex(*rng.standard_normal(2))
        Z = Bicomplex.from_idempotent(z1, 0)
        W, rep = invertible_inside_ideal_demo(Z)
        worst = max(worst, (Z * W - E1).modulus())
        try:
            inverse(Z)
            fails += 1
        except NotInvertible:
            pass
        fails += not rep.passed
    return worst <= 1e-11 and fails == 0, f"max |ZW - e1| {worst:.2e}, {fails} failures"


@criterion(6, "structural maximal ideals equal the exhaustive oracle, n = 1..3, < 5 s")
def c06_maximal_oracle():
    t0 = time.perf_counter()
    agree = []
    for n in (1, 2, 3):
        mine = {I.key() for I in maximal_ideals(PointwiseAlgebra(n))}
        oracle = {I.key() for I in brute_force_maximal_oracle(n)}
        agree.append(mine == oracle and len(mine) == 2 * n)
    elapsed = time.perf_counter() - t0
    return all(agree) and elapsed < 5.0, f"agreement {agree}, {elapsed:.2f} s"


def _probes(rng, S1, S2):
    e1 = list(S1)
    e2 = list(S2)
    out = [(a, b) for a in e1 for b in e2]                      # eigenvalue cross-pairs
    out += [(a, complex(*3 * rng.standard_normal(2))) for a in e1]
    out += [(complex(*3 * rng.standard_normal(2)), b) for b in e2]
    out += [(a + 1e-3, b) for a in e1 for b in e2[:1]]           # near misses
    while len(out) < 220:
        out.append((complex(*3 * rng.standard_normal(2)), complex(*3 * rng.standard_normal(2))))
    return out


@criterion(7, "point/ap membership vs kernel and sigma_min oracles, 50 matrices x >= 200 probes")
def c07_spectrum_oracles():
    rng = np.random.default_rng(107)
    disagreements = 0
    probes_total = 0
    for trial in range(50):
        n = (2, 3, 4)[trial % 3]
        T = BCMatrix.random(n, rng)
        T1, T2 = T.components()
        sp, sap = point_spectrum(T), approx_point_spectrum(T)
        t1, t2 = TAU_EIG * spectral_norm(T1), TAU_EIG * spectral_norm(T2)
        eye = np.eye(n)
        for a, b in _probes(rng, np.linalg.eigvals(T1), np.linalg.eigvals(T2)):
            lam = Bicomplex.from_idempotent(a, b)
            probes_total += 1
            p_oracle = len(kernel_bc(T, lam)) > 0
            s1 = smallest_singular_value(T1 - lam.z1 * eye)
            s2 = smallest_singular_value(T2 - lam.z2 * eye)
            ap_oracle = s1 < t1 and s2 < t2
            disagreements += (sp.contains(lam) != p_oracle) + (sap.contains(lam) != ap_oracle)
    return disagreements == 0, f"{disagreements} disagreements over {probes_total} probes"


@criterion(8, "point-but-not-ap eigenvalue demo on the diag fixture and 50 random matrices")
def c08_sigma_p_not_ap():
    mats = [BCMatrix.load(FIXTURE)]
    rng = np.random.default_rng(108)
    mats += [BCMatrix.random(int(rng.integers(1, 6)), rng) for _ in range(50)]
    failed = sum(not sigma_p_not_in_ap_demo(T).passed for T in mats)
    return failed == 0, f"{len(mats) - failed}/{len(mats)} pass all three checks"


@criterion(9, "division spectrum: free coordinate up to 1e6 and members beyond R <= 1e9")
def c09_division_spectrum():
    bad = []
    for side in ("e1", "e2"):
        for a in (2, -1 + 0.5j, 0):
            x = DivisionAlgebraElem(side, a)
            S = division_spectrum(x)
            for r in (0.0, 1e3, 1e6):
                lam = (Bicomplex.from_idempotent(a, r) if side == "e1"
                       else Bicomplex.from_idempotent(r, a))
                if not (S.contains(lam) and in_division_spectrum_direct(x, lam)):
                    bad.append((side, a, r))
            for R in (1.0, 1e3, 1e6, 1e9):
                lam = S.unbounded_member(R)
                free = lam.z2 if side == "e1" else lam.z1
                if not (S.contains(lam) and abs(free) > R and in_division_spectrum_direct(x, lam)):
                    bad.append((side, a, "R", R))
    return not bad, f"{len(bad)} failures" + (f": {bad[:3]}" if bad else "")


@criterion(10, "e1 V and e2 V invariant for 100 random matrices, n <= 8, leak < 1e-12")
def c10_invariant_subspace():
    rng = np.random.default_rng(110)
    worst = 0.0
    for trial in range(100):
        n = 1 + trial % 8
        T = BCMatrix.random(n, rng)
        zero = np.zeros(n, dtype=np.complex128)
        for _ in range(4):
            v = crandn(rng, n)
            v /= np.linalg.norm(v)
            for x, opposite in ((BCVector.from_components(v, zero), 1),
                                (BCVector.from_components(zero, v), 0)):
                leak = T.apply(x).components()[opposite]
                worst = max(worst, float(np.linalg.norm(leak)))
    return worst < 1e-12, f"max opposite-coordinate leak {worst:.2e}"


@criterion(11, "triangle, submultiplicativity and operator-norm supremum within 5%, n <= 4")
def c11_norms():
    rng = np.random.default_rng(111)
    viol = 0
    for _ in range(2000):
        a, b = (Bicomplex.from_basis(*rng.standard_normal(4)) for _ in range(2))
        na, nb = norm_d(a), norm_d(b)
        slack = 1e-13 * (1 + a.modulus() + b.modulus()) ** 2
        viol += not leq_prime(norm_d(a + b), na + nb, tol=slack)
        viol += not leq_prime(norm_d(a * b), na * nb, tol=slack)
    worst_ratio = 1.0
    over = 0.0
    for n in (1, 2, 3, 4):
        for _ in range(3):
            T, S = BCMatrix.random(n, rng), BCMatrix.random(n, rng)
            nT, nS = operator_norm_d(T), operator_norm_d(S)
            viol += not leq_prime(operator_norm_d(T @ S), nT * nS, tol=1e-12 * nT.a1 * nS.a1 + 1e-12 * nT.a2 * nS.a2)
            x = BCVector(crandn(rng, n), crandn(rng, n))
            y = BCVector(crandn(rng, n), crandn(rng, n))
            nx, ny = x.norm_d(), y.norm_d()
            viol += not leq_prime((x + y).norm_d(), nx + ny, tol=1e-12 * (nx.a1 + ny.a1 + nx.a2 + ny.a2))
            viol += not leq_prime(T.apply(x).norm_d(), nT * nx, tol=1e-12 * (nT.a1 * nx.a1 + nT.a2 * nx.a2))
            # 1e4 hyperbolic-unit probes, batched through the Cartesian product
            T1, T2 = T.components()
            P1, P2 = crandn(rng, n, 10_000), crandn(rng, n, 10_000)
            P1 /= np.linalg.norm(P1, axis=0)
            P2 /= np.linalg.norm(P2, axis=0)
            Z = 0.5 * (P1 + P2)
            W = 0.5j * (P1 - P2)
            TZ = T.z @ Z - T.w @ W
            TW = T.w @ Z + T.z @ W
            s1 = float(np.max(np.linalg.norm(TZ - 1j * TW, axis=0)))
            s2 = float(np.max(np.linalg.norm(TZ + 1j * TW, axis=0)))
            over = max(over, s1 / nT.a1 - 1, s2 / nT.a2 - 1)
            worst_ratio = min(worst_ratio, s1 / nT.a1, s2 / nT.a2)
    ok = viol == 0 and over <= 1e-12 and worst_ratio >= 0.95
    return ok, f"{viol} axiom violations, sup/norm in [{worst_ratio:.4f}, {1 + over:.4f}]"


@criterion(12, "every demo verb gives byte-identical JSON across two runs with a fixed seed")
def c12_cli_determinism():
    env = dict(os.environ)
    src = str(ROOT / "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    differing = []
    for name in DEMOS:
        cmd = [sys.executable, "-m", "bicomplex", "demo", name, "--seed", "2024"]
        outs = [subprocess.run(cmd, capture_output=True, env=env, cwd=ROOT) for _ in range(2)]
        if outs[0].returncode != 0 or outs[0].stdout != outs[1].stdout or not outs[0].stdout:
            differing.append(name)
    return not differing, f"{len(DEMOS) - len(differing)}/{len(DEMOS)} demos identical and passing"


CRITERIA = [c01_arithmetic, c02_trichotomy, c03_quotient_field, c04_kernel_not_maximal,
            c05_invertible_in_ideal, c06_maximal_oracle, c07_spectrum_oracles, c08_sigma_p_not_ap,
            c09_division_spectrum, c10_invariant_subspace, c11_norms, c12_cli_determinism]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{c.num:02d}" for c in CRITERIA])
def test_acceptance(check):
    ok, detail = check()
    assert ok, detail


def main():
    for check in CRITERIA:
        try:
            check()
        except Exception:
            pass
    lines = summary_lines()
    print("\n".join(lines))
    return 0 if all(RESULTS[n][0] for n in RESULTS) else 1


if __name__ == "__main__":
    sys.exit(main())
