"""Hot numeric kernels.

Every kernel exists in two flavours: a vectorised numpy version (suffix
``_np``) and a loop version compiled with numba (suffix ``_nb``).  The
unsuffixed public names point at whichever backend ``_accel`` selected.
Bicomplex arrays are always passed as a pair of complex128 arrays, either
Cartesian ``(z, w)`` for ``z + j w`` or idempotent ``(z1, z2)``.
"""
import numpy as np

from . import _accel

# --------------------------------------------------------------------------
# batch bicomplex arithmetic


def cartesian_mul_np(z, w, u, v):
    return z * u - w * v, w * u + z * v


def to_idempotent_np(z, w):
    return z - 1j * w, z + 1j * w


def from_idempotent_np(z1, z2):
    return 0.5 * (z1 + z2), 0.5j * (z1 - z2)


def idempotent_mul_np(z1, z2, u1, u2):
    return z1 * u1, z2 * u2


def _cartesian_mul_loop(z, w, u, v):
    n = z.shape[0]
    re = np.empty(n, dtype=np.complex128)
    im = np.empty(n, dtype=np.complex128)
    for k in range(n):
        re[k] = z[k] * u[k] - w[k] * v[k]
        im[k] = w[k] * u[k] + z[k] * v[k]
    return re, im


def _to_idempotent_loop(z, w):
    n = z.shape[0]
    a = np.empty(n, dtype=np.complex128)
    b = np.empty(n, dtype=np.complex128)
    for k in range(n):
        iw = 1j * w[k]
        a[k] = z[k] - iw
        b[k] = z[k] + iw
    return a, b


def _from_idempotent_loop(z1, z2):
    n = z1.shape[0]
    z = np.empty(n, dtype=np.complex128)
    w = np.empty(n, dtype=np.complex128)
    for k in range(n):
        z[k] = 0.5 * (z1[k] + z2[k])
        w[k] = 0.5j * (z1[k] - z2[k])
    return z, w


def _idempotent_mul_loop(z1, z2, u1, u2):
    n = z1.shape[0]
    a = np.empty(n, dtype=np.complex128)
    b = np.empty(n, dtype=np.complex128)
    for k in range(n):
        a[k] = z1[k] * u1[k]
        b[k] = z2[k] * u2[k]
    return a, b


cartesian_mul_nb = _accel.njit(_cartesian_mul_loop)
to_idempotent_nb = _accel.njit(_to_idempotent_loop)
from_idempotent_nb = _accel.njit(_from_idempotent_loop)
idempotent_mul_nb = _accel.njit(_idempotent_mul_loop)


def _flat(f):
    """Wrap a 1-D loop kernel so it accepts arrays of any shape."""

    def wrapper(*arrays):
        arrs = [np.ascontiguousarray(a, dtype=np.complex128) for a in arrays]
        shape = np.broadcast_shapes(*(a.shape for a in arrs))
        flat = [np.ascontiguousarray(np.broadcast_to(a, shape)).ravel() for a in arrs]
        out = f(*flat)
        return tuple(o.reshape(shape) for o in out)

    wrapper.__name__ = getattr(f, "__name__", "kernel")
    return wrapper


# --------------------------------------------------------------------------
# complex eigenvalues: Householder Hessenberg reduction + shifted QR


def _qr_eigvals(A, maxiter):
    """Eigenvalues of a square complex matrix.

    Returns ``(eigs, ok)``; ``ok`` is False if ``maxiter`` total QR sweeps
    were spent before every eigenvalue deflated.
    """
    n = A.shape[0]
    eigs = np.zeros(n, dtype=np.complex128)
    if n == 0:
        return eigs, True
    H = A.copy()
    # Householder reduction to upper Hessenberg form
    for k in range(n - 2):
        x = H[k + 1:, k].copy()
        alpha = np.sqrt(np.sum(np.abs(x) ** 2))
        if alpha == 0.0:
            continue
        x0 = x[0]
        if abs(x0) == 0.0:
            phase = 1.0 + 0.0j
        else:
            phase = x0 / abs(x0)
        x[0] = x0 + phase * alpha
        x = x / np.sqrt(np.sum(np.abs(x) ** 2))
        blk = H[k + 1:, k:]
        proj = np.sum(np.conj(x).reshape(-1, 1) * blk, axis=0)
        H[k + 1:, k:] = blk - 2.0 * x.reshape(-1, 1) * proj.reshape(1, -1)
        blk = H[:, k + 1:]
        proj = np.sum(blk * x.reshape(1, -1), axis=1)
        H[:, k + 1:] = blk - 2.0 * proj.reshape(-1, 1) * np.conj(x).reshape(1, -1)
        H[k + 2:, k] = 0.0

    eps = 2.220446049250313e-16
    hnorm = np.sqrt(np.sum(np.abs(H) ** 2))
    cs = np.zeros(n, dtype=np.complex128)
    ss = np.zeros(n, dtype=np.complex128)
    hi = n - 1
    local = 0
    total = 0
    while hi >= 0:
        if hi == 0:
            eigs[0] = H[0, 0]
            break
        # start of the active unreduced block
        lo = hi
        while lo > 0:
            scale = abs(H[lo - 1, lo - 1]) + abs(H[lo, lo])
            if scale == 0.0:
                scale = hnorm
            if abs(H[lo, lo - 1]) <= eps * scale:
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs[hi] = H[hi, hi]
            hi -= 1
            local = 0
            continue
        total += 1
        local += 1
        if total > maxiter:
            for k in range(hi + 1):
                eigs[k] = H[k, k]
            return eigs, False
        d = H[hi, hi]
        if local % 11 == 10:
            # exceptional shift, breaks cycling
            mu = d + 0.75 * abs(H[hi, hi - 1])
        else:
            # Wilkinson shift from the trailing 2x2 block
            a = H[hi - 1, hi - 1]
            half = 0.5 * (a - d)
            disc = np.sqrt(half * half + H[hi - 1, hi] * H[hi, hi - 1])
            mid = 0.5 * (a + d)
            mu = mid + disc
            if abs(mid - disc - d) < abs(mu - d):
                mu = mid - disc
        for k in range(lo, hi + 1):
            H[k, k] -= mu
        # H - mu I = Q R with Givens rotations on the rows
        for k in range(lo, hi):
            x0 = H[k, k]
            y0 = H[k + 1, k]
            r = np.sqrt(abs(x0) ** 2 + abs(y0) ** 2)
            if r == 0.0:
                c = 1.0 + 0.0j
                s = 0.0 + 0.0j
            else:
                c = x0 / r
                s = y0 / r
            cs[k] = c
            ss[k] = s
            rk = H[k, k:hi + 1].copy()
            rk1 = H[k + 1, k:hi + 1].copy()
            H[k, k:hi + 1] = np.conj(c) * rk + np.conj(s) * rk1
            H[k + 1, k:hi + 1] = -s * rk + c * rk1
        # then R Q on the columns
        for k in range(lo, hi):
            c = cs[k]
            s = ss[k]
            top = min(k + 2, hi) + 1
            ck = H[lo:top, k].copy()
            ck1 = H[lo:top, k + 1].copy()
            H[lo:top, k] = c * ck + s * ck1
            H[lo:top, k + 1] = -np.conj(s) * ck + np.conj(c) * ck1
        for k in range(lo, hi + 1):
            H[k, k] += mu
    return eigs, True


qr_eigvals_np = _qr_eigvals
qr_eigvals_nb = _accel.njit(_qr_eigvals)

if _accel.USE_NUMBA:
    cartesian_mul = _flat(cartesian_mul_nb)
    to_idempotent = _flat(to_idempotent_nb)
    from_idempotent = _flat(from_idempotent_nb)
    idempotent_mul = _flat(idempotent_mul_nb)
    _qr_eigvals_impl = qr_eigvals_nb
else:
    cartesian_mul = cartesian_mul_np
    to_idempotent = to_idempotent_np
    from_idempotent = from_idempotent_np
    idempotent_mul = idempotent_mul_np
    _qr_eigvals_impl = qr_eigvals_np


def qr_eigvals(A, maxiter=None):
    A = np.ascontiguousarray(A, dtype=np.complex128)
    if maxiter is None:
        maxiter = 500 * max(A.shape[0], 1)
    return _qr_eigvals_impl(A, int(maxiter))
