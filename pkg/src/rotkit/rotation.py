"""Monomials of the rotation algebra, the flip/cubic/Fourier/hexic automorphisms,
and the unbounded functionals (twisted traces) evaluated on monomials.

A monomial ``c e(q theta) U^m V^n`` is kept in U-before-V normal order, using
``V U = e(theta) U V`` to commute.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .scalar import ONE, ZERO, CycScalar, FormalTrace, RationalLike, as_rational


@dataclass(frozen=True)
class Monomial:
    coeff: CycScalar = ONE
    freq: Fraction = Fraction(0)
    m: int = 0
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", CycScalar.coerce(self.coeff))
        object.__setattr__(self, "freq", as_rational(self.freq))
        if self.coeff.is_zero():
            object.__setattr__(self, "freq", Fraction(0))
            object.__setattr__(self, "m", 0)
            object.__setattr__(self, "n", 0)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __mul__(self, other: Monomial) -> Monomial:
        return mono_mul(self, other)

    def __pow__(self, k: int) -> Monomial:
        return mono_pow(self, k)

    def __repr__(self):
        return f"Monomial({self.coeff!r}, e({self.freq}θ), U^{self.m} V^{self.n})"


def mono(m: int = 0, n: int = 0, freq: RationalLike = 0, coeff=ONE) -> Monomial:
    return Monomial(CycScalar.coerce(coeff), as_rational(freq), m, n)


U = mono(1, 0)
V = mono(0, 1)
IDENTITY = mono()
ZERO_MONOMIAL = Monomial(ZERO)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    # U^a V^b U^c V^d = e(b c theta) U^(a+c) V^(b+d)
    return Monomial(a.coeff * b.coeff, a.freq + b.freq + a.n * b.m, a.m + b.m, a.n + b.n)


def mono_inverse(x: Monomial) -> Monomial:
    if x.is_zero():
        raise ZeroDivisionError("zero monomial has no inverse")
    # (U^a V^b)^-1 = e(ab theta) U^-a V^-b
    return Monomial(x.coeff.inverse(), -x.freq + x.m * x.n, -x.m, -x.n)


def mono_pow(x: Monomial, k: int) -> Monomial:
    if k < 0:
        x, k = mono_inverse(x), -k
    result = IDENTITY
    while k:
        if k & 1:
            result = mono_mul(result, x)
        x = mono_mul(x, x)
        k >>= 1
    return result


class Automorphism(enum.Enum):
    FLIP = ("phi", 2)
    CUBIC = ("alpha", 3)
    FOURIER = ("sigma", 4)
    HEXIC = ("rho", 6)

    def __init__(self, symbol: str, order: int):
        self.symbol = symbol
        self.order = order

    @classmethod
    def of_order(cls, n: int) -> Automorphism:
        for g in cls:
            if g.order == n:
                return g
        raise ValueError(f"no canonical automorphism of order {n}")


_MINUS_HALF = Fraction(-1, 2)

# Images of (U, V); e^{-pi i theta} = e(-theta/2).
GENERATOR_IMAGES: dict[Automorphism, tuple[Monomial, Monomial]] = {
    Automorphism.FLIP: (mono(-1, 0), mono(0, -1)),
    Automorphism.CUBIC: (mono(-1, 1, _MINUS_HALF), mono(-1, 0)),
    Automorphism.FOURIER: (mono(0, -1), mono(1, 0)),
    Automorphism.HEXIC: (mono(0, 1), mono(-1, 1, _MINUS_HALF)),
}


@lru_cache(maxsize=4096)
def _generator_power(g: Automorphism, which: int, k: int) -> Monomial:
    return mono_pow(GENERATOR_IMAGES[g][which], k)


def apply_automorphism(g: Automorphism, x: Monomial) -> Monomial:
    if x.is_zero():
        return x
    img = mono_mul(_generator_power(g, 0, x.m), _generator_power(g, 1, x.n))
    return Monomial(x.coeff * img.coeff, x.freq + img.freq, img.m, img.n)


def apply_power(g: Automorphism, k: int, x: Monomial) -> Monomial:
    for _ in range(k):
        x = apply_automorphism(g, x)
    return x


def divisor_delta(r: int, s: int) -> int:
    """1 if r divides s, else 0."""
    if r < 1:
        raise ValueError("divisor_delta needs r >= 1")
    return int(s % r == 0)


class UnknownFunctional(KeyError):
    pass


# Each functional on U^m V^n is (theta-frequency, 0/1 gate).
_Kernel = Callable[[int, int], "tuple[Fraction, int]"]


def _flip_phase(m: int, n: int) -> Fraction:
    return Fraction(-m * n, 2)


def _phi(j: int, k: int) -> _Kernel:
    return lambda m, n: (_flip_phase(m, n), divisor_delta(2, m - j) * divisor_delta(2, n - k))


FUNCTIONALS: dict[str, _Kernel] = {
    # flip
    "phi00": _phi(0, 0),
    "phi01": _phi(0, 1),
    "phi10": _phi(1, 0),
    "phi11": _phi(1, 1),
    # Fourier
    "psi10": lambda m, n: (Fraction((m - n) ** 2, 4), divisor_delta(2, m - n)),
    "psi11": lambda m, n: (Fraction((m - n) ** 2, 4), divisor_delta(2, m - n - 1)),
    "psi20": lambda m, n: (_flip_phase(m, n), divisor_delta(2, m) * divisor_delta(2, n)),
    "psi21": lambda m, n: (_flip_phase(m, n), divisor_delta(2, m - 1) * divisor_delta(2, n - 1)),
    "psi22": lambda m, n: (_flip_phase(m, n), divisor_delta(2, m - n - 1)),
    # hexic
    "Psi10": lambda m, n: (Fraction(m * m + n * n, 2), 1),
    "Psi20": lambda m, n: (Fraction((m - n) ** 2, 6), divisor_delta(3, m - n)),
    "Psi21": lambda m, n: (Fraction((m - n) ** 2, 6), 1),
    "Psi30": lambda m, n: (_flip_phase(m, n), divisor_delta(2, m) * divisor_delta(2, n)),
    "Psi31": lambda m, n: (_flip_phase(m, n), 1),
    # cubic
    "Phi10": lambda m, n: (Fraction((m - n) ** 2, 6), divisor_delta(3, m - n)),
    "Phi11": lambda m, n: (Fraction((m - n) ** 2, 6), divisor_delta(3, m - n - 1)),
    "Phi12": lambda m, n: (Fraction((m - n) ** 2, 6), divisor_delta(3, m - n - 2)),
}


def eval_functional(name: str, x: Monomial) -> FormalTrace:
    try:
        kernel = FUNCTIONALS[name]
    except KeyError:
        raise UnknownFunctional(name) from None
    if x.is_zero():
        return FormalTrace()
    q, gate = kernel(x.m, x.n)
    if not gate:
        return FormalTrace()
    return FormalTrace.exp(q + x.freq, x.coeff)


def eval_sum(names: list[str], x: Monomial) -> FormalTrace:
    total = FormalTrace()
    for name in names:
        total = total + eval_functional(name, x)
    return total
