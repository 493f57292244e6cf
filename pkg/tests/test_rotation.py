from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rotkit.rotation import (
    FUNCTIONALS,
    IDENTITY,
    U,
    V,
    Automorphism,
    UnknownFunctional,
    apply_automorphism,
    apply_power,
    divisor_delta,
    eval_functional,
    eval_sum,
    mono,
    mono_inverse,
    mono_mul,
)
from rotkit.scalar import I, FormalTrace

ints = st.integers(-12, 12)
monos = st.builds(lambda m, n, q: mono(m, n, Fraction(q, 2)), ints, ints, st.integers(-4, 4))


def test_vu_commutes_into_normal_order():
    assert mono_mul(V, U) == mono(1, 1, 1)


def test_uv_is_normal_ordered():
    assert U * V == mono(1, 1)


def test_uv_squared():
    assert mono(1, 1) * mono(1, 1) == mono(2, 2, 1)


@given(monos, monos, monos)
def test_mono_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(monos)
def test_mono_inverse(x):
    assert x * mono_inverse(x) == IDENTITY
    assert mono_inverse(x) * x == IDENTITY
    assert x ** -1 == mono_inverse(x)


def test_monomial_coefficient():
    x = mono(1, 0, coeff=I) * mono(0, 1, coeff=I)
    assert x == mono(1, 1, 0, -1)


@given(ints, ints)
def test_sigma_closed_form(m, n):
    assert apply_automorphism(Automorphism.FOURIER, mono(m, n)) == mono(n, -m, -m * n)


@given(ints, ints)
def test_phi_has_zero_phase(m, n):
    img = apply_automorphism(Automorphism.FLIP, mono(m, n))
    assert img == mono(-m, -n)
    assert img.freq == 0


def test_generator_images():
    assert apply_automorphism(Automorphism.CUBIC, U) == mono(-1, 1, Fraction(-1, 2))
    assert apply_automorphism(Automorphism.CUBIC, V) == mono(-1, 0)
    assert apply_automorphism(Automorphism.HEXIC, U) == V
    assert apply_automorphism(Automorphism.HEXIC, V) == mono(-1, 1, Fraction(-1, 2))


@pytest.mark.parametrize("g", list(Automorphism))
def test_orders(g):
    x = mono(3, -2, Fraction(1, 3))
    assert apply_power(g, g.order, x) == x
    assert all(apply_power(g, k, mono(1, 2)) != mono(1, 2) for k in range(1, g.order))
    assert Automorphism.of_order(g.order) is g


@given(monos, monos)
def test_automorphisms_are_multiplicative(a, b):
    for g in Automorphism:
        assert apply_automorphism(g, a * b) == apply_automorphism(g, a) * apply_automorphism(g, b)


@given(ints, ints)
def test_automorphism_relations(m, n):
    x = mono(m, n)
    phi = apply_automorphism(Automorphism.FLIP, x)
    assert apply_power(Automorphism.FOURIER, 2, x) == phi
    assert apply_power(Automorphism.HEXIC, 3, x) == phi
    assert apply_power(Automorphism.HEXIC, 2, x) == apply_automorphism(Automorphism.CUBIC, x)


@pytest.mark.parametrize("r, s, expected", [(2, 4, 1), (3, 4, 0), (2, -2, 1), (3, 0, 1), (1, 7, 1)])
def test_divisor_delta(r, s, expected):
    assert divisor_delta(r, s) == expected


def test_divisor_delta_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisor_delta(0, 3)


def test_functional_examples():
    assert eval_functional("Psi10", mono(1, 1)) == FormalTrace.exp(1)
    assert eval_functional("Phi10", mono(1, 2)).is_zero()
    assert eval_functional("phi00", mono(2, 2)) == FormalTrace.exp(-2)


def test_functional_carries_monomial_phase_and_coefficient():
    x = mono(2, 0, Fraction(1, 3), coeff=I)
    assert eval_functional("phi00", x) == FormalTrace.exp(Fraction(1, 3), I)


def test_unknown_functional():
    with pytest.raises(UnknownFunctional):
        eval_functional("chi00", U)


def test_every_functional_vanishes_on_zero():
    zero = mono(coeff=0)
    assert all(eval_functional(name, zero).is_zero() for name in FUNCTIONALS)


@given(ints, ints)
def test_functional_identities(m, n):
    x = mono(m, n)
    assert eval_sum(["Psi30"], x) == eval_sum(["phi00"], x)
    assert eval_sum(["Psi31"], x) == eval_sum(["phi00", "phi01", "phi10", "phi11"], x)
    assert eval_sum(["Phi10"], x) == eval_sum(["Psi20"], x)
    assert eval_sum(["Phi10", "Phi11", "Phi12"], x) == eval_sum(["Psi21"], x)
    assert eval_sum(["psi22"], x) == eval_sum(["phi01", "phi10"], x)


@given(ints, ints)
def test_flip_functionals_are_flip_invariant(m, n):
    x = mono(m, n)
    y = apply_automorphism(Automorphism.FLIP, x)
    for name in ("phi00", "phi01", "phi10", "phi11"):
        assert eval_functional(name, x) == eval_functional(name, y)


@given(ints, ints)
def test_fourier_functionals_are_fourier_invariant(m, n):
    x = mono(m, n)
    y = apply_automorphism(Automorphism.FOURIER, x)
    for name in ("psi10", "psi11"):
        assert eval_functional(name, x) == eval_functional(name, y)
