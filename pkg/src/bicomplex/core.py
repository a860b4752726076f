"""Bicomplex and hyperbolic scalars.

A bicomplex number ``Z = z + j w`` (``z, w`` complex in the unit ``i``,
``ij = ji``, ``i^2 = j^2 = -1``) is stored in Cartesian form.  Its
idempotent coordinates

    z1 = z - i w,    z2 = z + i w,    Z = e1 z1 + e2 z2,

with ``e1 = (1 + ij)/2`` and ``e2 = (1 - ij)/2``, are computed on demand.
Products, inverses and norms act coordinatewise in that basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number

__all__ = [
    "ToleranceConfig", "DEFAULT_TOL", "NotInvertible",
    "Bicomplex", "Hyperbolic", "E1", "E2", "ONE", "ZERO", "J", "K",
    "add", "mul", "conj", "idempotent_decompose", "recompose", "inverse",
    "is_zero", "is_zero_divisor", "is_invertible", "norm_d",
    "in_d_plus", "leq_prime", "format_complex", "format_basis",
    "format_idempotent",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical cutoffs.

    ``tau_zero`` decides when an idempotent coordinate counts as zero
    (absolute, scaled by ``max(1, |Z|)``); ``tau_eig`` is the relative
    eigenvalue matching / null-space cutoff; ``tau_norm`` is used for
    comparisons of hyperbolic norms.
    """

    tau_zero: float = 1e-10
    tau_eig: float = 1e-8
    tau_norm: float = 1e-12

    def __post_init__(self):
        for name in ("tau_zero", "tau_eig", "tau_norm"):
            val = getattr(self, name)
            if not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be a positive finite number, got {val!r}")


DEFAULT_TOL = ToleranceConfig()


class NotInvertible(ArithmeticError):
    """Raised when inverting an element with a vanishing idempotent coordinate."""

    def __init__(self, value, zero_divisor):
        self.value = value
        self.zero_divisor = zero_divisor
        kind = "zero divisor" if zero_divisor else "zero"
        super().__init__(f"{value} is not invertible ({kind})")


def _finite_complex(x, name):
    c = complex(x)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError(f"{name} must be finite, got {c!r}")
    return c


class Bicomplex:
    """Immutable bicomplex number ``z + j w``."""

    __slots__ = ("_z", "_w")

    def __init__(self, z=0.0, w=0.0):
        object.__setattr__(self, "_z", _finite_complex(z, "z"))
        object.__setattr__(self, "_w", _finite_complex(w, "w"))

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex is immutable")

    @classmethod
    def from_idempotent(cls, z1, z2):
        z1 = complex(z1)
        z2 = complex(z2)
        return cls(0.5 * (z1 + z2), 0.5j * (z1 - z2))

    @classmethod
    def from_basis(cls, a=0.0, b=0.0, c=0.0, d=0.0):
        """Build ``a + b i + c j + d k`` with ``k = ij``."""
        return cls(complex(a, b), complex(c, d))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Bicomplex):
            return value
        if isinstance(value, Hyperbolic):
            return value.as_bicomplex()
        if isinstance(value, Number):
            return cls(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as Bicomplex")

    @property
    def z(self):
        return self._z

    @property
    def w(self):
        return self._w

    @property
    def z1(self):
        return self._z - 1j * self._w

    @property
    def z2(self):
        return self._z + 1j * self._w

    def idempotent(self):
        return self.z1, self.z2

    def basis(self):
        """Real coefficients ``(a, b, c, d)`` on ``1, i, j, k``."""
        return self._z.real, self._z.imag, self._w.real, self._w.imag

    def modulus(self):
        """Euclidean length of ``(a, b, c, d)``."""
        return math.hypot(abs(self._z), abs(self._w))

    # arithmetic

    def __add__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self._z + other._z, self._w + other._w)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self._z - other._z, self._w - other._w)

    def __rsub__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Bicomplex(-self._z, -self._w)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        z, w, u, v = self._z, self._w, other._z, other._w
        return Bicomplex(z * u - w * v, w * u + z * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other * inverse(self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        z1, z2 = self.idempotent()
        return Bicomplex.from_idempotent(z1 ** n, z2 ** n)

    def __eq__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self._z == other._z and self._w == other._w

    def __hash__(self):
        return hash((self._z, self._w))

    def isclose(self, other, atol=1e-12, rtol=1e-12):
        other = Bicomplex.coerce(other)
        diff = (self - other).modulus()
        return diff <= atol + rtol * max(self.modulus(), other.modulus())

    def conj(self, kind):
        return conj(self, kind)

    def __repr__(self):
        return f"Bicomplex({self._z!r}, {self._w!r})"

    def __str__(self):
        return format_basis(self)

    def to_json(self):
        return {"z": [self._z.real, self._z.imag], "w": [self._w.real, self._w.imag]}

    @classmethod
    def from_json(cls, obj):
        try:
            z = obj["z"]
            w = obj["w"]
            return cls(complex(float(z[0]), float(z[1])), complex(float(w[0]), float(w[1])))
        except (KeyError, IndexError, TypeError) as exc:
            raise ValueError(f"malformed bicomplex JSON: {obj!r}") from exc


E1 = Bicomplex.from_idempotent(1, 0)
E2 = Bicomplex.from_idempotent(0, 1)
ONE = Bicomplex(1)
ZERO = Bicomplex(0)
J = Bicomplex(0, 1)
K = Bicomplex(0, 1j)


class Hyperbolic:
    """Immutable hyperbolic number ``x + k y`` with ``k^2 = 1``.

    Idempotent coordinates are ``a1 = x + y`` and ``a2 = x - y``.
    """

    __slots__ = ("_x", "_y")

    def __init__(self, x=0.0, y=0.0):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"hyperbolic components must be finite, got {(x, y)!r}")
        object.__setattr__(self, "_x", x)
        object.__setattr__(self, "_y", y)

    def __setattr__(self, name, value):
        raise AttributeError("Hyperbolic is immutable")

    @classmethod
    def from_idempotent(cls, a1, a2):
        return cls(0.5 * (a1 + a2), 0.5 * (a1 - a2))

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    @property
    def a1(self):
        return self._x + self._y

    @property
    def a2(self):
        return self._x - self._y

    def idempotent(self):
        return self.a1, self.a2

    def as_bicomplex(self):
        # x + k y = x + j (i y)
        return Bicomplex(self._x, 1j * self._y)

    def _coerce(self, other):
        if isinstance(other, Hyperbolic):
            return other
        if isinstance(other, (int, float)):
            return Hyperbolic(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Hyperbolic(self._x + other._x, self._y + other._y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Hyperbolic(self._x - other._x, self._y - other._y)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Hyperbolic(-self._x, -self._y)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Hyperbolic.from_idempotent(self.a1 * other.a1, self.a2 * other.a2)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._x == other._x and self._y == other._y

    def __hash__(self):
        return hash((self._x, self._y))

    def isclose(self, other, atol=1e-12, rtol=1e-12):
        other = self._coerce(other)
        return all(math.isclose(p, q, rel_tol=rtol, abs_tol=atol)
                   for p, q in zip(self.idempotent(), other.idempotent()))

    def __repr__(self):
        return f"Hyperbolic.from_idempotent({self.a1!r}, {self.a2!r})"

    def to_json(self):
        return {"x": self._x, "y": self._y, "e1": self.a1, "e2": self.a2}


# --------------------------------------------------------------------------
# functional interface


def add(a, b):
    return Bicomplex.coerce(a) + Bicomplex.coerce(b)


def mul(a, b):
    return Bicomplex.coerce(a) * Bicomplex.coerce(b)


_CONJ_KINDS = {1: 1, 2: 2, 3: 3, "1": 1, "2": 2, "3": 3,
               "dagger1": 1, "dagger2": 2, "dagger3": 3}


def conj(Z, kind):
    """One of the three conjugations.

    kind 1: conj(z) + j conj(w);  kind 2: z - j w;  kind 3: conj(z) - j conj(w).
    """
    try:
        k = _CONJ_KINDS[kind]
    except (KeyError, TypeError):
        raise ValueError(f"unknown conjugation {kind!r}; expected 1, 2 or 3") from None
    Z = Bicomplex.coerce(Z)
    if k == 1:
        return Bicomplex(Z.z.conjugate(), Z.w.conjugate())
    if k == 2:
        return Bicomplex(Z.z, -Z.w)
    return Bicomplex(Z.z.conjugate(), -Z.w.conjugate())


def idempotent_decompose(Z):
    return Bicomplex.coerce(Z).idempotent()


def recompose(z1, z2):
    return Bicomplex.from_idempotent(z1, z2)


def _cutoff(Z, tol):
    return tol.tau_zero * max(1.0, Z.modulus())


def _zero_flags(Z, tol):
    Z = Bicomplex.coerce(Z)
    tol = tol or DEFAULT_TOL
    cut = _cutoff(Z, tol)
    return abs(Z.z1) <= cut, abs(Z.z2) <= cut


def is_zero(Z, tol=None):
    a, b = _zero_flags(Z, tol)
    return a and b


def is_zero_divisor(Z, tol=None):
    a, b = _zero_flags(Z, tol)
    return a != b


def is_invertible(Z, tol=None):
    a, b = _zero_flags(Z, tol)
    return not (a or b)


def inverse(Z, tol=None):
    Z = Bicomplex.coerce(Z)
    a, b = _zero_flags(Z, tol)
    if a or b:
        raise NotInvertible(Z, zero_divisor=(a != b))
    return Bicomplex.from_idempotent(1.0 / Z.z1, 1.0 / Z.z2)


def norm_d(Z):
    """Hyperbolic-valued modulus ``e1 |z1| + e2 |z2|``."""
    Z = Bicomplex.coerce(Z)
    return Hyperbolic.from_idempotent(abs(Z.z1), abs(Z.z2))


def in_d_plus(alpha, tol=0.0):
    return alpha.a1 >= -tol and alpha.a2 >= -tol


def leq_prime(alpha, beta, tol=0.0):
    """Partial order on hyperbolic numbers: ``beta - alpha`` has both coordinates >= 0."""
    return beta.a1 - alpha.a1 >= -tol and beta.a2 - alpha.a2 >= -tol


# --------------------------------------------------------------------------
# text forms


def _fmt_real(x):
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _join_terms(coeffs, units):
    out = _fmt_real(coeffs[0])
    for c, u in zip(coeffs[1:], units):
        s = _fmt_real(c)
        if not s.startswith("-"):
            s = "+" + s
        out += s + u
    return out


def format_complex(c):
    c = complex(c)
    return _join_terms((c.real, c.imag), ("i",))


def format_basis(Z):
    """``a+bi+cj+dk`` with shortest round-tripping float text."""
    return _join_terms(Bicomplex.coerce(Z).basis(), ("i", "j", "k"))


def format_idempotent(Z):
    z1, z2 = Bicomplex.coerce(Z).idempotent()
    return f"[{format_complex(z1)}; {format_complex(z2)}]"
