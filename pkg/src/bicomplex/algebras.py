"""Finite-dimensional bicomplex algebras and their maximal ideals.

``PointwiseAlgebra(n)`` is BC^n with the entrywise product; ``FnAlgebra``
is the algebra of BC-valued functions on a finite point set, which is the
same thing with named coordinates.  Idempotently each splits as
``e1 C^n + e2 C^n``, so every ideal is described by the coordinates that
are forced to vanish in each component (``IdealSpec``).  Coordinate
indices are 1-based throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DEFAULT_TOL, Bicomplex
from .linalg import BCVector, SpectrumSet
from .report import Report


class PointNotInX(KeyError):
    pass


class NotProper(ValueError):
    pass


class PointwiseAlgebra:
    """BC^n with entrywise operations; unit ``(1, ..., 1)``."""

    kind = "pointwise"

    def __init__(self, n):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = int(n)

    def __repr__(self):
        return f"PointwiseAlgebra({self.n})"

    def __eq__(self, other):
        return type(other) is type(self) and other.n == self.n

    def __hash__(self):
        return hash((type(self), self.n))

    def identity(self):
        return BCVector(np.ones(self.n))

    def zero(self):
        return BCVector.zeros(self.n)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return BCVector(*kernels.cartesian_mul(x.z, x.w, y.z, y.w))

    def scale(self, lam, x):
        return x.scale(lam)

    def random_element(self, rng):
        shape = (2, self.n)
        a = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return BCVector(a[0], a[1])

    def is_invertible(self, x, tol=None):
        return all(_coord_nonzero(e, tol) for e in x.entries())

    def to_json(self):
        return {"type": self.kind, "n": self.n}


def _coord_nonzero(e, tol):
    tol = tol or DEFAULT_TOL
    cut = tol.tau_zero * max(1.0, e.modulus())
    return abs(e.z1) > cut and abs(e.z2) > cut


class FnAlgebra(PointwiseAlgebra):
    """BC-valued functions on a finite set ``X``; pointwise operations, unit = constant 1."""

    kind = "fn"

    def __init__(self, points):
        points = tuple(str(p) for p in points)
        if not points:
            raise ValueError("X must be nonempty")
        if len(set(points)) != len(points):
            raise ValueError("points of X must be distinct")
        super().__init__(len(points))
        self.points = points

    def __repr__(self):
        return f"FnAlgebra({list(self.points)!r})"

    def __eq__(self, other):
        return type(other) is type(self) and other.points == self.points

    def __hash__(self):
        return hash((type(self), self.points))

    def index(self, x):
        """1-based coordinate of the point ``x``."""
        try:
            return self.points.index(str(x)) + 1
        except ValueError:
            raise PointNotInX(x) from None

    def function(self, values):
        """Element from a mapping ``point -> value`` or a callable on points."""
        if callable(values):
            vals = [values(p) for p in self.points]
        else:
            vals = [values.get(p, 0) for p in self.points]
        return BCVector.from_entries(vals)

    def evaluate(self, f, x):
        return f[self.index(x) - 1]

    def to_json(self):
        return {"type": self.kind, "points": list(self.points)}


def algebra_from_json(obj):
    kind = obj.get("type")
    if kind == "pointwise":
        return PointwiseAlgebra(int(obj["n"]))
    if kind == "fn":
        if "points" in obj:
            return FnAlgebra(obj["points"])
        return FnAlgebra([f"x{k}" for k in range(1, int(obj["n"]) + 1)])
    raise ValueError(f"unknown algebra type {kind!r}")


@dataclass(frozen=True)
class IdealSpec:
    """``{a : a1[i] = 0 for i in Z1, a2[i] = 0 for i in Z2}`` inside an n-dimensional algebra."""

    n: int
    Z1: frozenset = frozenset()
    Z2: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "Z1", frozenset(int(i) for i in self.Z1))
        object.__setattr__(self, "Z2", frozenset(int(i) for i in self.Z2))
        for i in self.Z1 | self.Z2:
            if not 1 <= i <= self.n:
                raise ValueError(f"coordinate {i} out of range 1..{self.n}")

    @property
    def proper(self):
        return bool(self.Z1 or self.Z2)

    def __le__(self, other):
        # fewer vanishing constraints = larger ideal
        return self.n == other.n and other.Z1 <= self.Z1 and other.Z2 <= self.Z2

    def __lt__(self, other):
        return self <= other and self != other

    def contains(self, x, tol=None):
        tol = tol or DEFAULT_TOL
        x1, x2 = x.components()
        cut = tol.tau_zero * max(1.0, float(np.max(np.abs(np.concatenate([x.z, x.w])), initial=0.0)))
        return (all(abs(x1[i - 1]) <= cut for i in self.Z1)
                and all(abs(x2[i - 1]) <= cut for i in self.Z2))

    def sample(self, rng):
        """Random element of the ideal."""
        shape = (2, self.n)
        a = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        for i in self.Z1:
            a[0, i - 1] = 0
        for i in self.Z2:
            a[1, i - 1] = 0
        return BCVector.from_components(a[0], a[1])

    def theorem_form(self):
        """``"component-1 full"``, ``"component-2 full"``, or None."""
        if not self.Z1 and len(self.Z2) == 1:
            return "component-1 full"
        if not self.Z2 and len(self.Z1) == 1:
            return "component-2 full"
        return None

    def key(self):
        return (tuple(sorted(self.Z1)), tuple(sorted(self.Z2)))

    def to_json(self):
        return {"Z1": sorted(self.Z1), "Z2": sorted(self.Z2)}

    @classmethod
    def from_json(cls, obj, n):
        return cls(n, frozenset(obj.get("Z1", ())), frozenset(obj.get("Z2", ())))


def check_ideal_closure(A, ideal, samples=100, rng=None, tol=None):
    """Sampled closure of ``ideal`` under addition and multiplication by ``A``."""
    rng = rng if rng is not None else np.random.default_rng(0)
    for _ in range(samples):
        x = ideal.sample(rng)
        y = ideal.sample(rng)
        a = A.random_element(rng)
        if not ideal.contains(A.add(x, y), tol):
            return False
        if not ideal.contains(A.mul(a, x), tol) or not ideal.contains(A.mul(x, a), tol):
            return False
    return True


def vanishing_ideal(A, x):
    """The ideal of functions vanishing at the point ``x``."""
    i = A.index(x)
    return IdealSpec(A.n, frozenset({i}), frozenset({i}))


def point_maximal_ideals(A, x):
    """The two maximal ideals attached to ``x``: ``e1 A1 + e2 M_x`` and ``e1 M_x + e2 A2``."""
    i = A.index(x)
    return IdealSpec(A.n, frozenset(), frozenset({i})), IdealSpec(A.n, frozenset({i}), frozenset())


def maximal_ideals(A):
    n = A if isinstance(A, int) else A.n
    out = []
    for i in range(1, n + 1):
        out.append(IdealSpec(n, frozenset({i}), frozenset()))
        out.append(IdealSpec(n, frozenset(), frozenset({i})))
    return out


def is_maximal(A, ideal):
    if not ideal.proper:
        raise NotProper("the whole algebra is not a proper ideal")
    return len(ideal.Z1) + len(ideal.Z2) == 1


# --------------------------------------------------------------------------
# brute-force oracle


def _rank(M, tol=1e-9):
    if M.shape[0] == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0])))


def enumerate_ideals(n):
    """Every ideal of BC^n as ``(generator, basis)`` with basis rows in Cartesian C^{2n}.

    The ideals of a finite product of copies of C are the principal ideals
    ``g A`` for idempotent ``g``; the basis is formed by multiplying ``g``
    against the 2n standard C-basis vectors of ``A`` with the Cartesian
    product rule.
    """
    A = PointwiseAlgebra(n)
    std = []
    for k in range(n):
        e = np.zeros(n, dtype=np.complex128)
        e[k] = 1
        std.append(BCVector(e, np.zeros(n)))
        std.append(BCVector(np.zeros(n), e))
    out = []
    for bits in itertools.product((0.0, 1.0), repeat=2 * n):
        g = BCVector.from_components(np.array(bits[:n]), np.array(bits[n:]))
        rows = [np.concatenate([p.z, p.w]) for p in (A.mul(g, b) for b in std)]
        M = np.array(rows)
        # orthonormal row basis of the span
        _, s, vh = np.linalg.svd(M)
        r = int(np.sum(s > 1e-9))
        out.append((g, vh[:r]))
    return out


def _to_spec(n, basis):
    # coordinates on which every element of the span has vanishing component
    z, w = basis[:, :n], basis[:, n:]
    x1 = z - 1j * w
    x2 = z + 1j * w
    Z1 = {k + 1 for k in range(n) if np.all(np.abs(x1[:, k]) < 1e-9)}
    Z2 = {k + 1 for k in range(n) if np.all(np.abs(x2[:, k]) < 1e-9)}
    return IdealSpec(n, frozenset(Z1), frozenset(Z2))


def brute_force_maximal_oracle(n):
    """Maximal ideals of BC^n by exhaustive enumeration and pairwise inclusion."""
    if n > 4:
        raise ValueError("the oracle is limited to n <= 4")
    ideals = enumerate_ideals(n)
    full = 2 * n
    ranks = [b.shape[0] for _, b in ideals]
    proper = [k for k, r in enumerate(ranks) if r < full]
    maximal = []
    for a in proper:
        Ba = ideals[a][1]
        bigger = False
        for b in proper:
            if ranks[b] <= ranks[a]:
                continue
            Bb = ideals[b][1]
            if _rank(np.vstack([Ba, Bb])) == ranks[b]:
                bigger = True
                break
        if not bigger:
            maximal.append(_to_spec(n, Ba))
    return maximal


# --------------------------------------------------------------------------
# division algebras


@dataclass(frozen=True)
class DivisionAlgebraElem:
    """Element ``e_side * a`` of the one-sided division algebra ``e_side C(i)``."""

    side: str
    a: complex

    def __post_init__(self):
        if self.side not in ("e1", "e2"):
            raise ValueError("side must be 'e1' or 'e2'")
        object.__setattr__(self, "a", complex(self.a))

    def as_bicomplex(self):
        if self.side == "e1":
            return Bicomplex.from_idempotent(self.a, 0)
        return Bicomplex.from_idempotent(0, self.a)

    def unit(self):
        return DivisionAlgebraElem(self.side, 1)

    def is_invertible(self, tol=None):
        tol = tol or DEFAULT_TOL
        return abs(self.a) > tol.tau_zero

    def minus_scalar(self, lam):
        """``x - lam * e_side``; only the ``side`` coordinate of ``lam`` survives."""
        lam = Bicomplex.coerce(lam)
        l = lam.z1 if self.side == "e1" else lam.z2
        return DivisionAlgebraElem(self.side, self.a - l)


def division_spectrum(x, tol=None):
    """Spectrum of ``x`` in its division algebra: one coordinate pinned, the other free."""
    tol = tol or DEFAULT_TOL
    if x.side == "e1":
        return SpectrumSet("point", (x.a,), (), tol.tau_zero, tol.tau_zero)
    return SpectrumSet("point", (), (x.a,), tol.tau_zero, tol.tau_zero)


def in_division_spectrum_direct(x, lam, tol=None):
    """Membership decided from the definition: ``x - lam e_side`` not invertible."""
    return not x.minus_scalar(lam).is_invertible(tol)


def spectrum_unbounded_demo(x, bounds=(0.0, 1e3, 1e6, 1e9), tol=None):
    tol = tol or DEFAULT_TOL
    spec = division_spectrum(x, tol)
    rep = Report(
        claim="the spectrum of an element of a bicomplex division algebra is unbounded",
        witnesses=[{"element": x.as_bicomplex(), "side": x.side, "spectrum": spec}],
    )
    for r in (0.0, 1e3, 1e6):
        if x.side == "e1":
            lam = Bicomplex.from_idempotent(x.a, r)
        else:
            lam = Bicomplex.from_idempotent(r, x.a)
        rep.check(f"free coordinate {r:g} is a member",
                  spec.contains(lam) and in_division_spectrum_direct(x, lam, tol))
    for R in bounds:
        lam = spec.unbounded_member(R)
        free = lam.z2 if x.side == "e1" else lam.z1
        rep.witnesses.append({"bound": R, "member": lam})
        rep.check(f"member beyond R = {R:g}", spec.contains(lam) and abs(free) > R, abs(free))
    return rep


def not_division_algebra_witness(n, tol=None):
    """``e1 (1, ..., 1)`` is a zero divisor of BC^n, so BC^n is not a division algebra."""
    A = PointwiseAlgebra(n)
    ones = np.ones(n)
    zeros = np.zeros(n)
    x = BCVector.from_components(ones, zeros)
    ann = BCVector.from_components(zeros, ones)
    prod = A.mul(x, ann)
    rep = Report(
        claim="an algebra with both idempotent components nontrivial is not a division algebra",
        witnesses=[{"element": x, "annihilator": ann}],
    )
    resid = float(np.max(np.abs(np.concatenate([prod.z, prod.w]))))
    rep.check("witness is nonzero", float(np.linalg.norm(x.z)) > 0, float(np.linalg.norm(x.z)))
    rep.check("witness * annihilator = 0", resid <= 1e-15, resid)
    # W x = 1 coordinatewise: component 2 reads w2[k] * 0 = 1, unsolvable
    x1, x2 = x.components()
    unsolvable = [k + 1 for k in range(n) if abs(x2[k]) == 0]
    rep.check("no W with W * witness = identity (component-2 equations 0 = 1)",
              len(unsolvable) == n, float(len(unsolvable)))
    rep.check("witness is not invertible", not A.is_invertible(x, tol))
    return rep


def maximal_ideal_forms_demo(n, rng=None, tol=None):
    """Structural maximal ideals against the exhaustive oracle, plus closure sampling."""
    rng = rng if rng is not None else np.random.default_rng(0)
    A = PointwiseAlgebra(n)
    structural = maximal_ideals(A)
    oracle = brute_force_maximal_oracle(n)
    rep = Report(
        claim="every maximal ideal has one idempotent component equal to the whole component algebra",
        witnesses=[{"n": n, "maximal_ideals": structural}],
    )
    rep.check("structural list equals brute-force oracle",
              {I.key() for I in structural} == {I.key() for I in oracle},
              float(len({I.key() for I in structural} ^ {I.key() for I in oracle})))
    rep.check("each has a component-full form", all(I.theorem_form() for I in structural))
    rep.check("each is a sampled ideal", all(check_ideal_closure(A, I, 20, rng, tol) for I in structural))
    rep.check("identity lies in none", not any(I.contains(A.identity(), tol) for I in structural))
    X = FnAlgebra([f"x{k}" for k in range(1, n + 1)])
    keys = {I.key() for I in structural}
    rep.check("point ideals e1 A1 + e2 M_x and e1 M_x + e2 A2 all appear",
              all(I.key() in keys for p in X.points for I in point_maximal_ideals(X, p)))
    return rep
