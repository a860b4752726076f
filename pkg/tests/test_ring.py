import numpy as np
import pytest

from bicomplex import E1, E2, ONE, ZERO, Bicomplex, NotInvertible, inverse
from bicomplex.ring import (
    BCIdeal, MultFunctional, RingHom, ZeroComponent, apply_hom, check_mult_functional,
    coset_embed, hom_functional, idempotents, in_ideal, invertible_inside_ideal_demo,
    kernel, kernel_not_maximal_demo, quotient_is_field, quotient_rep, random_bicomplex,
)


def as_bc(v):
    return Bicomplex.coerce(v)


# ---------------------------------------------------------------- homomorphisms

def test_proj_e1_and_identity(rng):
    Z = random_bicomplex(rng)
    assert apply_hom("projE1", Z) == E1 * Z
    assert apply_hom(RingHom.IDENTITY, Z) == Z


def test_quot_plus_kills_one_plus_ji():
    Z = Bicomplex(1, 1j)
    assert apply_hom(RingHom.QUOT_PLUS, Z) == 0
    assert in_ideal(Z, kernel(RingHom.QUOT_PLUS))


@pytest.mark.parametrize("h", list(RingHom))
def test_homomorphism_laws(h):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        a, b = random_bicomplex(rng), random_bicomplex(rng)
        fa, fb = as_bc(apply_hom(h, a)), as_bc(apply_hom(h, b))
        r_add = (as_bc(apply_hom(h, a + b)) - (fa + fb)).modulus()
        r_mul = (as_bc(apply_hom(h, a * b)) - fa * fb).modulus()
        worst = max(worst, r_add, r_mul)
    assert worst < 1e-11


@pytest.mark.parametrize("h", [h for h in RingHom if h is not RingHom.ZERO])
def test_idempotents_map_to_idempotents(h):
    for g in idempotents():
        fg = as_bc(apply_hom(h, g))
        assert (fg * fg).isclose(fg)


def test_kernels_named():
    assert kernel("projE1") is BCIdeal.I2
    assert kernel("identity") is BCIdeal.ZERO
    assert kernel("quotMinus") is BCIdeal.I2
    assert kernel("quotPlus") is BCIdeal.I1
    assert kernel("zero") is BCIdeal.FULL


@pytest.mark.parametrize("h", [h for h in RingHom if kernel(h) in (BCIdeal.I1, BCIdeal.I2)])
def test_kernel_membership_matches_hom(h, rng):
    ker = kernel(h)
    for _ in range(200):
        c = complex(*rng.standard_normal(2))
        inside = coset_embed(c, BCIdeal.I2 if ker is BCIdeal.I1 else BCIdeal.I1)
        outside = random_bicomplex(rng)
        assert in_ideal(inside, ker)
        assert as_bc(apply_hom(h, inside)).modulus() < 1e-10
        assert not in_ideal(outside, ker)
        assert as_bc(apply_hom(h, outside)).modulus() > 1e-10


# ---------------------------------------------------------------- ideals

def test_in_ideal_examples():
    assert in_ideal(E1 * 7, BCIdeal.I1)
    assert in_ideal(ZERO, BCIdeal.I1)
    assert not in_ideal(ONE, BCIdeal.I1)


def test_ideal_lattice():
    assert BCIdeal.ZERO < BCIdeal.I1 < BCIdeal.FULL
    assert not BCIdeal.I1 <= BCIdeal.I2
    assert not BCIdeal.FULL.proper


def test_i1_i2_intersect_to_zero_and_sum_to_bc(rng):
    Z = random_bicomplex(rng)
    a, b = E1 * Z, E2 * Z
    assert in_ideal(a, "I1") and in_ideal(b, "I2")
    assert (a + b).isclose(Z)
    assert not (in_ideal(Z, "I1") and in_ideal(Z, "I2"))


@pytest.mark.parametrize("ideal", [BCIdeal.I1, BCIdeal.I2])
def test_ideal_absorbs_multiplication(ideal, rng):
    g = E1 if ideal is BCIdeal.I1 else E2
    for _ in range(500):
        Z = g * random_bicomplex(rng)
        W = random_bicomplex(rng)
        assert in_ideal(Z * W, ideal)
        assert in_ideal(Z + g * W, ideal)


def test_idempotents_exhaustive():
    found = idempotents()
    expected = [ZERO, ONE, E1, E2]
    assert len(found) == 4
    for e in expected:
        assert any(e.isclose(g) for g in found)
    for g in found:
        assert g * g == g


# ---------------------------------------------------------------- quotients

def test_quotient_rep_examples():
    Z = Bicomplex.from_idempotent(5, 9)
    assert quotient_rep(Z, "I1") == 9
    assert quotient_rep(E1 * 5, "I1") == 0
    with pytest.raises(ValueError):
        quotient_rep(Z, "zero")


def test_quotient_rep_is_hom_and_embed_round_trip(rng):
    for _ in range(300):
        Z, W = random_bicomplex(rng), random_bicomplex(rng)
        for ideal in ("I1", "I2"):
            assert quotient_rep(Z * W, ideal) == pytest.approx(quotient_rep(Z, ideal) * quotient_rep(W, ideal))
            c = quotient_rep(Z, ideal)
            assert quotient_rep(coset_embed(c, ideal), ideal) == pytest.approx(c, abs=1e-15)


@pytest.mark.parametrize("ideal", ["I1", "I2"])
def test_quotient_is_field(ideal, rng):
    res = quotient_is_field(ideal, 1000, rng)
    assert res and res.samples == 1000
    assert res.max_residual < 1e-13


def test_zero_ideal_control_fails_with_e1():
    res = quotient_is_field("zero", 1000, np.random.default_rng(1))
    assert not res
    assert res.witness == E1
    assert not quotient_is_field("full")


def test_coset_of_two_inverse():
    two = coset_embed(2, "I1")
    half = coset_embed(0.5, "I1")
    assert two == E2 * 2
    assert quotient_rep(two * half, "I1") == 1


def test_quotient_is_field_rejects_zero_samples():
    with pytest.raises(ValueError):
        quotient_is_field("I1", 0)


# ---------------------------------------------------------------- functionals

def test_identity_functional_passes():
    assert check_mult_functional(hom_functional("identity")) == []


def test_zero_map_fails_unit_clause():
    viol = check_mult_functional(hom_functional("zero"))
    assert [v["clause"] for v in viol] == ["(ii) f(e) = 1"]


def test_quot_plus_multiplicative():
    viol = check_mult_functional(hom_functional("quotPlus"), samples=1000)
    assert viol == []


def test_non_multiplicative_functional_is_caught():
    f = MultFunctional(lambda Z: Z + Z, name="double")
    clauses = {v["clause"] for v in check_mult_functional(f, samples=50)}
    assert clauses == {"(i) multiplicative", "(ii) f(e) = 1"}


# ---------------------------------------------------------------- demos

def test_kernel_not_maximal_demo():
    rep = kernel_not_maximal_demo()
    assert rep.passed, rep.render_text()
    w = rep.witnesses[0]
    assert w["kernel"] == "zero" and w["superset"] == "I1" and w["element"] == E1


def test_invertible_inside_ideal_examples():
    W, rep = invertible_inside_ideal_demo(E1 * 4)
    assert rep.passed
    assert W.isclose(E1 * 0.25)
    assert (E1 * 4 * W).isclose(E1)
    W, _ = invertible_inside_ideal_demo(E1)
    assert W == E1
    with pytest.raises(NotInvertible):
        inverse(E1 * 4)


def test_invertible_inside_ideal_errors():
    with pytest.raises(ZeroComponent):
        invertible_inside_ideal_demo(ZERO)
    with pytest.raises(ValueError):
        invertible_inside_ideal_demo(ONE)
