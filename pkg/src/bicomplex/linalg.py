"""Finite-dimensional bicomplex modules and their operators.

Vectors and matrices are stored in Cartesian form ``Z + j W`` (two complex
arrays).  Every spectral question is answered on the idempotent components
``T1 = Z - iW`` and ``T2 = Z + iW``; the component spaces carry the
Euclidean norm and operators the spectral norm.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DEFAULT_TOL, Bicomplex, Hyperbolic, format_complex
from .report import Report

MAX_EIG_DIM = 16


class ConvergenceFailure(ArithmeticError):
    pass


class NotInApSpectrum(ValueError):
    pass


def _as_complex(a, ndim):
    arr = np.array(a, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    return arr


class BCVector:
    """Element of BC^n."""

    __slots__ = ("z", "w")

    def __init__(self, z, w=None):
        z = _as_complex(z, 1)
        w = np.zeros_like(z) if w is None else _as_complex(w, 1)
        if z.shape != w.shape:
            raise ValueError("z and w must have the same length")
        self.z = z
        self.w = w
        self.z.flags.writeable = False
        self.w.flags.writeable = False

    @classmethod
    def from_components(cls, x1, x2):
        x1 = _as_complex(x1, 1)
        x2 = _as_complex(x2, 1)
        return cls(*kernels.from_idempotent(x1, x2))

    @classmethod
    def from_entries(cls, entries):
        entries = [Bicomplex.coerce(e) for e in entries]
        return cls([e.z for e in entries], [e.w for e in entries])

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros(n, dtype=np.complex128))

    @property
    def n(self):
        return self.z.shape[0]

    def __len__(self):
        return self.n

    def components(self):
        return kernels.to_idempotent(self.z, self.w)

    @property
    def x1(self):
        return self.components()[0]

    @property
    def x2(self):
        return self.components()[1]

    def __getitem__(self, k):
        return Bicomplex(self.z[k], self.w[k])

    def entries(self):
        return [self[k] for k in range(self.n)]

    def __add__(self, other):
        return BCVector(self.z + other.z, self.w + other.w)

    def __sub__(self, other):
        return BCVector(self.z - other.z, self.w - other.w)

    def __neg__(self):
        return BCVector(-self.z, -self.w)

    def scale(self, lam):
        """Module action of a bicomplex scalar."""
        lam = Bicomplex.coerce(lam)
        u = np.full(self.n, lam.z)
        v = np.full(self.n, lam.w)
        return BCVector(*kernels.cartesian_mul(u, v, self.z, self.w))

    def norm_d(self):
        x1, x2 = self.components()
        return Hyperbolic.from_idempotent(np.linalg.norm(x1), np.linalg.norm(x2))

    def is_unit(self, tol=1e-12):
        """Both component norms equal 1 (the hyperbolic unit)."""
        nd = self.norm_d()
        return abs(nd.a1 - 1.0) <= tol and abs(nd.a2 - 1.0) <= tol

    def allclose(self, other, atol=1e-12, rtol=1e-12):
        return (np.allclose(self.z, other.z, atol=atol, rtol=rtol)
                and np.allclose(self.w, other.w, atol=atol, rtol=rtol))

    def to_json(self):
        return [e.to_json() for e in self.entries()]

    def __repr__(self):
        return f"BCVector(z={self.z!r}, w={self.w!r})"


class BCMatrix:
    """Square bicomplex matrix acting on BC^n."""

    __slots__ = ("z", "w")

    def __init__(self, z, w=None):
        z = _as_complex(z, 2)
        w = np.zeros_like(z) if w is None else _as_complex(w, 2)
        if z.shape != w.shape or z.shape[0] != z.shape[1]:
            raise ValueError(f"need two square matrices of equal shape, got {z.shape} and {w.shape}")
        self.z = z
        self.w = w
        self.z.flags.writeable = False
        self.w.flags.writeable = False

    @classmethod
    def from_components(cls, T1, T2):
        T1 = _as_complex(T1, 2)
        T2 = _as_complex(T2, 2)
        return cls(*kernels.from_idempotent(T1, T2))

    @classmethod
    def from_entries(cls, rows):
        rows = [[Bicomplex.coerce(e) for e in row] for row in rows]
        return cls([[e.z for e in r] for r in rows], [[e.w for e in r] for r in rows])

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n), dtype=np.complex128))

    @classmethod
    def random(cls, n, rng):
        shape = (n, n)
        z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        w = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return cls(z, w)

    @property
    def n(self):
        return self.z.shape[0]

    def components(self):
        return kernels.to_idempotent(self.z, self.w)

    def __getitem__(self, idx):
        i, k = idx
        return Bicomplex(self.z[i, k], self.w[i, k])

    def apply(self, x):
        """``T x`` computed in Cartesian form."""
        # (Z + jW)(x + jy) = (Zx - Wy) + j(Wx + Zy)
        return BCVector(self.z @ x.z - self.w @ x.w, self.w @ x.z + self.z @ x.w)

    def __matmul__(self, other):
        if isinstance(other, BCVector):
            return self.apply(other)
        if isinstance(other, BCMatrix):
            return BCMatrix(self.z @ other.z - self.w @ other.w,
                            self.w @ other.z + self.z @ other.w)
        return NotImplemented

    def __add__(self, other):
        return BCMatrix(self.z + other.z, self.w + other.w)

    def __sub__(self, other):
        return BCMatrix(self.z - other.z, self.w - other.w)

    def shift(self, lam):
        """``T - lam I``."""
        lam = Bicomplex.coerce(lam)
        eye = np.eye(self.n)
        return BCMatrix(self.z - lam.z * eye, self.w - lam.w * eye)

    def allclose(self, other, atol=1e-12, rtol=1e-12):
        return (np.allclose(self.z, other.z, atol=atol, rtol=rtol)
                and np.allclose(self.w, other.w, atol=atol, rtol=rtol))

    def to_json(self):
        return {"n": self.n,
                "entries": [[self[i, k].to_json() for k in range(self.n)] for i in range(self.n)]}

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["n"])
            rows = [[Bicomplex.from_json(e) for e in row] for row in obj["entries"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from exc
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix JSON declares n={n} but entries are not {n}x{n}")
        return cls.from_entries(rows)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self):
        return f"BCMatrix(n={self.n})"


def decompose_operator(T):
    return T.components()


def recompose_operator(T1, T2):
    return BCMatrix.from_components(T1, T2)


def spectral_norm(A):
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.svd(A, compute_uv=False)[0])


def smallest_singular_value(A):
    return float(np.linalg.svd(np.asarray(A), compute_uv=False)[-1])


def operator_norm_d(T):
    T1, T2 = T.components()
    return Hyperbolic.from_idempotent(spectral_norm(T1), spectral_norm(T2))


def eigenvalues(A, max_n=MAX_EIG_DIM, maxiter=None):
    """Eigenvalues of a complex matrix with multiplicity, sorted by (re, im)."""
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"eigenvalues needs a square matrix, got shape {A.shape}")
    if A.shape[0] > max_n:
        raise ValueError(f"matrix size {A.shape[0]} exceeds the limit {max_n}")
    eigs, ok = kernels.qr_eigvals(A, maxiter)
    if not ok:
        raise ConvergenceFailure(f"QR iteration did not converge for a {A.shape[0]}x{A.shape[0]} matrix")
    order = np.lexsort((eigs.imag, eigs.real))
    return eigs[order]


def eigvec_for(A, lam):
    """Unit vector minimising ``|(A - lam I) v|``."""
    A = np.asarray(A, dtype=np.complex128)
    _, s, vh = np.linalg.svd(A - lam * np.eye(A.shape[0]))
    return vh[-1].conj(), float(s[-1])


def _scale(A):
    nrm = spectral_norm(A)
    return nrm if nrm > 0 else 1.0


def _unique(vals, atol):
    out = []
    for v in vals:
        if all(abs(v - u) > atol for u in out):
            out.append(complex(v))
    return tuple(out)


@dataclass(frozen=True)
class SpectrumSet:
    """Symbolic subset of BC built from two finite complex sets.

    ``kind == "point"``: ``e1 l1 + e2 l2`` belongs iff ``l1 in S1`` or
    ``l2 in S2`` (two slabs, each with one free coordinate).
    ``kind == "ap"``: belongs iff ``l1 in S1`` and ``l2 in S2``.
    ``atol1``/``atol2`` are the absolute matching radii per coordinate.
    """

    kind: str
    S1: tuple
    S2: tuple
    atol1: float = 1e-8
    atol2: float = 1e-8

    def __post_init__(self):
        if self.kind not in ("point", "ap"):
            raise ValueError(f"kind must be 'point' or 'ap', got {self.kind!r}")

    def _hit(self, vals, lam, atol):
        return any(abs(lam - s) <= atol for s in vals)

    def contains(self, lam):
        lam = Bicomplex.coerce(lam)
        # Cartesian storage perturbs each coordinate by ~eps * |lam|
        floor = 8 * np.finfo(float).eps * lam.modulus()
        h1 = self._hit(self.S1, lam.z1, self.atol1 + floor)
        h2 = self._hit(self.S2, lam.z2, self.atol2 + floor)
        return (h1 or h2) if self.kind == "point" else (h1 and h2)

    __contains__ = contains

    def is_empty(self):
        if self.kind == "point":
            return not self.S1 and not self.S2
        return not self.S1 or not self.S2

    def is_bounded(self):
        return self.kind == "ap" or self.is_empty()

    def unbounded_member(self, R):
        """A member whose free idempotent coordinate has modulus > R."""
        if self.kind != "point" or self.is_empty():
            raise ValueError("only a nonempty point-type spectrum is unbounded")
        free = float(R) + 1.0
        if self.S1:
            return Bicomplex.from_idempotent(self.S1[0], free)
        return Bicomplex.from_idempotent(free, self.S2[0])

    def to_json(self):
        return {"kind": self.kind,
                "S1": [[s.real, s.imag] for s in self.S1],
                "S2": [[s.real, s.imag] for s in self.S2]}

    @classmethod
    def from_json(cls, obj, tol=None):
        tol = tol or DEFAULT_TOL
        return cls(obj["kind"],
                   tuple(complex(a, b) for a, b in obj["S1"]),
                   tuple(complex(a, b) for a, b in obj["S2"]),
                   tol.tau_eig, tol.tau_eig)

    def describe(self):
        s1 = ", ".join(format_complex(s) for s in self.S1) or "empty"
        s2 = ", ".join(format_complex(s) for s in self.S2) or "empty"
        rule = "l1 in S1 OR l2 in S2" if self.kind == "point" else "l1 in S1 AND l2 in S2"
        return f"{self.kind} spectrum: S1 = {{{s1}}}, S2 = {{{s2}}}; member iff {rule}"


def _spectrum(T, kind, tol):
    tol = tol or DEFAULT_TOL
    T1, T2 = T.components()
    a1 = tol.tau_eig * _scale(T1)
    a2 = tol.tau_eig * _scale(T2)
    S1 = _unique(eigenvalues(T1), a1)
    S2 = _unique(eigenvalues(T2), a2)
    return SpectrumSet(kind, S1, S2, a1, a2)


def point_spectrum(T, tol=None):
    return _spectrum(T, "point", tol)


def approx_point_spectrum(T, tol=None):
    # finite dimension: each component's approximate point spectrum is its eigenvalue set
    return _spectrum(T, "ap", tol)


def spectrum_membership(S, lam):
    return S.contains(lam)


def null_basis(A, atol):
    """Orthonormal basis (rows) of the numerical null space of ``A``."""
    A = np.asarray(A, dtype=np.complex128)
    _, s, vh = np.linalg.svd(A)
    return [vh[k].conj() for k in range(A.shape[1]) if s[k] <= atol]


def kernel_bc(T, lam, tol=None):
    """Basis of ``ker(T - lam I)``: vectors ``e1 v`` and ``e2 w`` from the component null spaces."""
    tol = tol or DEFAULT_TOL
    lam = Bicomplex.coerce(lam)
    T1, T2 = T.components()
    n = T.n
    eye = np.eye(n)
    zero = np.zeros(n, dtype=np.complex128)
    basis = []
    for v in null_basis(T1 - lam.z1 * eye, tol.tau_eig * _scale(T1)):
        basis.append(BCVector.from_components(v, zero))
    for w in null_basis(T2 - lam.z2 * eye, tol.tau_eig * _scale(T2)):
        basis.append(BCVector.from_components(zero, w))
    return basis


@dataclass(frozen=True)
class ApproxEigWitness:
    lam: Bicomplex
    x: BCVector
    residual: Hyperbolic

    def to_json(self):
        return {"lambda": self.lam.to_json(), "x": self.x.to_json(),
                "residual": self.residual.to_json()}


def approx_eig_witness(T, lam, tol=None):
    """Hyperbolic-unit ``x`` with ``|(T - lam I) x|_D`` below ``tau_eig`` in both coordinates."""
    tol = tol or DEFAULT_TOL
    lam = Bicomplex.coerce(lam)
    if not approx_point_spectrum(T, tol).contains(lam):
        raise NotInApSpectrum(f"{lam} is not in the approximate point spectrum")
    T1, T2 = T.components()
    v1, _ = eigvec_for(T1, lam.z1)
    v2, _ = eigvec_for(T2, lam.z2)
    x = BCVector.from_components(v1, v2)
    residual = T.shift(lam).apply(x).norm_d()
    return ApproxEigWitness(lam, x, residual)


def sigma_p_not_in_ap_demo(T, tol=None):
    """Build ``lam`` in the point spectrum but outside the approximate point spectrum.

    ``lam1`` is the first eigenvalue of ``T1``; ``lam2 = max|S2| + 1`` is
    guaranteed to miss every eigenvalue of ``T2``.
    """
    tol = tol or DEFAULT_TOL
    sp = point_spectrum(T, tol)
    sap = approx_point_spectrum(T, tol)
    lam1 = sp.S1[0]
    lam2 = max(abs(s) for s in sp.S2) + 1.0
    lam = Bicomplex.from_idempotent(lam1, lam2)
    T1, T2 = T.components()
    kern = kernel_bc(T, lam, tol)
    sigma2 = smallest_singular_value(T2 - lam2 * np.eye(T.n))
    kres = max((T.shift(lam).apply(v).norm_d().a1 for v in kern), default=float("inf"))

    rep = Report(
        claim="the point spectrum of a BC-linear operator need not lie in its approximate point spectrum",
        witnesses=[{"lambda": lam, "lambda1": lam1, "lambda2": lam2,
                    "point_spectrum": sp, "kernel_dim": len(kern)}],
    )
    rep.check("lambda in point spectrum", sp.contains(lam),
              min(abs(lam1 - s) for s in sp.S1))
    rep.check("lambda not in approximate point spectrum", not sap.contains(lam), sigma2)
    rep.check("ker(T - lambda I) is nonzero", len(kern) > 0, kres)
    return rep


class FnOperator:
    """Wrap a callable on BCVector so it can be probed like a matrix."""

    def __init__(self, func, n):
        self.func = func
        self.n = n

    def apply(self, x):
        return self.func(x)


def invariant_subspace_residual(T, which="e1", samples=16, rng=None):
    """Largest relative opposite-coordinate leak of ``T`` on ``e1 V`` (or ``e2 V``).

    ``T`` is a BCMatrix or anything with ``.n`` and ``.apply``.
    """
    if which not in ("e1", "e2"):
        raise ValueError("which must be 'e1' or 'e2'")
    rng = rng if rng is not None else np.random.default_rng(0)
    scale = 1.0
    if isinstance(T, BCMatrix):
        nd = operator_norm_d(T)
        scale = max(nd.a1, nd.a2, 1.0)
    n = T.n
    zero = np.zeros(n, dtype=np.complex128)
    worst = 0.0
    for _ in range(samples):
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        if which == "e1":
            x = BCVector.from_components(v, zero)
        else:
            x = BCVector.from_components(zero, v)
        y1, y2 = T.apply(x).components()
        leak = y2 if which == "e1" else y1
        worst = max(worst, float(np.linalg.norm(leak)) / (scale * float(np.linalg.norm(v))))
    return worst


def invariant_subspace_check(T, which="e1", samples=16, rng=None, tol=None):
    """True iff ``T`` maps every sampled vector of ``e1 V`` (``e2 V``) back into it."""
    tol = tol or DEFAULT_TOL
    return invariant_subspace_residual(T, which, samples, rng) <= tol.tau_zero
