"""Ring homomorphisms and ideals of the bicomplex ring.

The ring has exactly four ideals: ``{0}``, ``e1 BC`` (``I1``), ``e2 BC``
(``I2``) and the whole ring.  ``I1`` is the set of elements whose second
idempotent coordinate vanishes, ``I2`` those whose first one does; both
quotients are isomorphic to the complex numbers, hence both are maximal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import (
    DEFAULT_TOL, E1, E2, ONE, ZERO, Bicomplex, NotInvertible, conj, inverse,
    is_invertible, is_zero, is_zero_divisor,
)
from .report import Report


class ZeroComponent(ValueError):
    """The idempotent coordinate needed for the construction is zero."""


class RingHom(enum.Enum):
    IDENTITY = "identity"
    DAGGER1 = "dagger1"
    DAGGER2 = "dagger2"
    DAGGER3 = "dagger3"
    ZERO = "zero"
    PROJ_E1 = "projE1"
    PROJ_E2 = "projE2"
    QUOT_PLUS = "quotPlus"    # z + jw -> z + iw, onto C(i)
    QUOT_MINUS = "quotMinus"  # z + jw -> z - iw, onto C(i)

    @property
    def complex_valued(self):
        return self in (RingHom.QUOT_PLUS, RingHom.QUOT_MINUS)


class BCIdeal(enum.Enum):
    ZERO = "zero"
    I1 = "I1"
    I2 = "I2"
    FULL = "full"

    @property
    def proper(self):
        return self is not BCIdeal.FULL

    def __le__(self, other):
        """Inclusion in the lattice {0} < I1, I2 < BC."""
        if not isinstance(other, BCIdeal):
            return NotImplemented
        if self is other or self is BCIdeal.ZERO or other is BCIdeal.FULL:
            return True
        return False

    def __lt__(self, other):
        if not isinstance(other, BCIdeal):
            return NotImplemented
        return self <= other and self is not other


def apply_hom(h, Z):
    """Evaluate ``h`` at ``Z``; returns a complex for the quotient maps."""
    h = RingHom(h)
    Z = Bicomplex.coerce(Z)
    if h is RingHom.IDENTITY:
        return Z
    if h is RingHom.DAGGER1:
        return conj(Z, 1)
    if h is RingHom.DAGGER2:
        return conj(Z, 2)
    if h is RingHom.DAGGER3:
        return conj(Z, 3)
    if h is RingHom.ZERO:
        return ZERO
    if h is RingHom.PROJ_E1:
        return E1 * Z
    if h is RingHom.PROJ_E2:
        return E2 * Z
    if h is RingHom.QUOT_PLUS:
        return Z.z + 1j * Z.w
    return Z.z - 1j * Z.w


_KERNELS = {
    RingHom.IDENTITY: BCIdeal.ZERO,
    RingHom.DAGGER1: BCIdeal.ZERO,
    RingHom.DAGGER2: BCIdeal.ZERO,
    RingHom.DAGGER3: BCIdeal.ZERO,
    RingHom.ZERO: BCIdeal.FULL,
    RingHom.PROJ_E1: BCIdeal.I2,
    RingHom.PROJ_E2: BCIdeal.I1,
    RingHom.QUOT_PLUS: BCIdeal.I1,
    RingHom.QUOT_MINUS: BCIdeal.I2,
}


def kernel(h):
    return _KERNELS[RingHom(h)]


def in_ideal(Z, ideal, tol=None):
    Z = Bicomplex.coerce(Z)
    ideal = BCIdeal(ideal)
    tol = tol or DEFAULT_TOL
    cut = tol.tau_zero * max(1.0, Z.modulus())
    if ideal is BCIdeal.FULL:
        return True
    if ideal is BCIdeal.ZERO:
        return is_zero(Z, tol)
    if ideal is BCIdeal.I1:
        return abs(Z.z2) <= cut
    return abs(Z.z1) <= cut


def quotient_rep(Z, ideal):
    """Complex representative of the coset ``Z + I``, for ``I`` in {I1, I2}."""
    Z = Bicomplex.coerce(Z)
    ideal = BCIdeal(ideal)
    if ideal is BCIdeal.I1:
        return Z.z2
    if ideal is BCIdeal.I2:
        return Z.z1
    raise ValueError(f"quotient representative defined only for I1, I2; got {ideal.value}")


def coset_embed(c, ideal):
    """Inverse of :func:`quotient_rep` on representatives: ``c -> e2 c`` (or ``e1 c``)."""
    ideal = BCIdeal(ideal)
    if ideal is BCIdeal.I1:
        return Bicomplex.from_idempotent(0, c)
    if ideal is BCIdeal.I2:
        return Bicomplex.from_idempotent(c, 0)
    raise ValueError(f"coset embedding defined only for I1, I2; got {ideal.value}")


def random_bicomplex(rng, size=None, scale=1.0):
    """Gaussian bicomplex samples (one, or a list of ``size``)."""
    if size is None:
        a = rng.standard_normal(4) * scale
        return Bicomplex.from_basis(*a)
    a = rng.standard_normal((size, 4)) * scale
    return [Bicomplex.from_basis(*row) for row in a]


@dataclass
class FieldCheck:
    """Outcome of :func:`quotient_is_field`."""

    ideal: BCIdeal
    is_field: bool
    samples: int
    witness: Bicomplex | None = None
    max_residual: float = 0.0

    def __bool__(self):
        return self.is_field


def quotient_is_field(ideal, samples=1000, rng=None, tol=None):
    """Sample nonzero cosets of ``BC/I`` and try to invert each constructively.

    For I1/I2 the quotient is C(i) and the inverse coset is built from the
    complex reciprocal of the representative.  The zero ideal is accepted
    too (the quotient is BC itself); there the idempotents are probed first
    and ``e1`` is reported as the non-invertible witness.
    """
    ideal = BCIdeal(ideal)
    tol = tol or DEFAULT_TOL
    rng = rng if rng is not None else np.random.default_rng(0)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if ideal is BCIdeal.FULL:
        # the zero ring has 1 = 0
        return FieldCheck(ideal, False, 0, witness=ONE)

    if ideal is BCIdeal.ZERO:
        probes = [E1, E2] + random_bicomplex(rng, samples)
        for Z in probes:
            if is_zero(Z, tol):
                continue
            if not is_invertible(Z, tol):
                return FieldCheck(ideal, False, len(probes), witness=Z)
        return FieldCheck(ideal, True, len(probes))

    unit = coset_embed(1.0, ideal)
    worst = 0.0
    for Z in random_bicomplex(rng, samples):
        c = quotient_rep(Z, ideal)
        if abs(c) <= tol.tau_zero:
            continue
        inv_coset = coset_embed(1.0 / c, ideal)
        # (I + Z)(I + W) must be the unit coset I + e_k
        prod = quotient_rep(Z * inv_coset, ideal)
        res = abs(prod - quotient_rep(unit, ideal))
        worst = max(worst, res)
        if res > 1e-11 * max(1.0, abs(c)):
            return FieldCheck(ideal, False, samples, witness=Z, max_residual=worst)
    return FieldCheck(ideal, True, samples, max_residual=worst)


# --------------------------------------------------------------------------
# multiplicative functionals


@dataclass
class MultFunctional:
    """A candidate multiplicative functional on a finite-dimensional algebra.

    ``mul`` is the algebra product, ``identity`` its unit, ``sample`` draws a
    random algebra element from a numpy Generator.  ``func`` must return a
    Bicomplex (complex outputs are embedded as ``z + j0``).
    """

    func: Callable
    identity: object = ONE
    mul: Callable = field(default=lambda x, y: x * y)
    sample: Callable = field(default=random_bicomplex)
    name: str = "f"

    def __call__(self, x):
        return Bicomplex.coerce(self.func(x))


def check_mult_functional(f, samples=1000, rng=None, atol=1e-11):
    """List of violated clauses; an empty list means ``f`` passed.

    Clause (i) is multiplicativity on random pairs, clause (ii) is
    ``f(identity) == 1``.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    violations = []
    worst = 0.0
    for _ in range(samples):
        x = f.sample(rng)
        y = f.sample(rng)
        lhs = f(f.mul(x, y))
        rhs = f(x) * f(y)
        res = (lhs - rhs).modulus()
        scale = max(1.0, lhs.modulus(), rhs.modulus())
        if res > atol * scale:
            worst = max(worst, res / scale)
    if worst > 0.0:
        violations.append({"clause": "(i) multiplicative", "residual": worst})
    unit_res = (f(f.identity) - ONE).modulus()
    if unit_res > atol:
        violations.append({"clause": "(ii) f(e) = 1", "residual": unit_res})
    return violations


def hom_functional(h):
    """Wrap a ring homomorphism of BC as a BC-valued functional."""
    h = RingHom(h)
    return MultFunctional(lambda Z: apply_hom(h, Z), name=h.value)


# --------------------------------------------------------------------------
# executable counterexamples


def kernel_not_maximal_demo(tol=None):
    """The identity functional is multiplicative, yet its kernel {0} is not maximal."""
    tol = tol or DEFAULT_TOL
    f = hom_functional(RingHom.IDENTITY)
    ker = kernel(RingHom.IDENTITY)
    superset = BCIdeal.I1
    witness = E1
    rep = Report(
        claim="the kernel of a nonzero multiplicative functional on BC need not be maximal",
        witnesses=[{"functional": "identity", "kernel": ker.value,
                    "superset": superset.value, "element": witness}],
    )
    viol = check_mult_functional(f, samples=200, rng=np.random.default_rng(0))
    rep.check("identity is a multiplicative functional", not viol,
              max((v["residual"] for v in viol), default=0.0))
    rep.check("kernel of identity is the zero ideal", ker is BCIdeal.ZERO
              and in_ideal(ZERO, ker, tol) and not in_ideal(witness, ker, tol))
    rep.check("witness e1 lies in I1", in_ideal(witness, superset, tol), abs(witness.z2))
    rep.check("witness e1 is nonzero", not is_zero(witness, tol), witness.modulus())
    rep.check("I1 is proper: 1 not in I1", not in_ideal(ONE, superset, tol))
    rep.check("e1 is a zero divisor", is_zero_divisor(witness, tol),
              (witness * E2).modulus())
    rep.check("{0} is strictly contained in I1", ker < superset)
    return rep


def invertible_inside_ideal_demo(Z, tol=None):
    """Invert ``Z = e1 z1`` inside ``I1`` relative to the identity ``e1``.

    Returns ``(W, report)`` with ``Z * W = e1``.
    """
    tol = tol or DEFAULT_TOL
    Z = Bicomplex.coerce(Z)
    if not in_ideal(Z, BCIdeal.I1, tol):
        raise ValueError(f"{Z} is not in I1")
    cut = tol.tau_zero * max(1.0, Z.modulus())
    if abs(Z.z1) <= cut:
        raise ZeroComponent(f"first idempotent coordinate of {Z} vanishes")
    W = Bicomplex.from_idempotent(1.0 / Z.z1, 0)
    rep = Report(
        claim="a proper ideal of BC may contain elements invertible relative to its own unit",
        witnesses=[{"element": Z, "inverse_in_ideal": W, "ideal_unit": E1}],
    )
    prod = Z * W
    rep.check("Z * W = e1", prod.isclose(E1, atol=1e-11, rtol=0), (prod - E1).modulus())
    rep.check("W lies in I1", in_ideal(W, BCIdeal.I1, tol), abs(W.z2))
    try:
        inverse(Z, tol)
        not_inv = False
    except NotInvertible:
        not_inv = True
    rep.check("Z is not invertible in BC", not_inv, abs(Z.z2))
    return W, rep


def idempotents():
    """All idempotents of BC, found by solving c^2 = c in each coordinate."""
    out = []
    for a in (0.0, 1.0):
        for b in (0.0, 1.0):
            out.append(Bicomplex.from_idempotent(a, b))
    return out
