"""Exact scalars: rationals, the cyclotomic field Q(zeta_12), theta-linear values
and formal sums of theta-exponentials.

``zeta`` is e(1/12) = exp(2 pi i / 12).  Elements of Q(zeta) are stored as
coordinates over (1, zeta, zeta^2, zeta^3) and reduced with
zeta^4 = zeta^2 - 1.  In particular ``I = zeta^3`` and ``OMEGA = zeta^2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

DEGREE = 4


def as_rational(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_to_str(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(x)


def _reduce(poly: list[Fraction]) -> tuple[Fraction, ...]:
    # x^k = x^(k-2) * x^2 = x^(k-2) * (x^2 - 1) shifted: x^k -> x^(k-2) - x^(k-4)
    poly = list(poly)
    for k in range(len(poly) - 1, DEGREE - 1, -1):
        c = poly[k]
        if c:
            poly[k - 2] += c
            poly[k - 4] -= c
        poly[k] = Fraction(0)
    poly += [Fraction(0)] * (DEGREE - len(poly))
    return tuple(poly[:DEGREE])


@dataclass(frozen=True)
class CycScalar:
    """Element of Q(zeta_12) as coordinates over 1, zeta, zeta^2, zeta^3."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.coeffs) != DEGREE:
            raise ValueError(f"expected {DEGREE} coordinates, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> CycScalar:
        # trusted constructor: coeffs already a 4-tuple of Fraction
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def of(cls, *coeffs: RationalLike) -> CycScalar:
        padded = list(coeffs) + [0] * (DEGREE - len(coeffs))
        return cls(tuple(as_rational(c) for c in padded))

    @classmethod
    def coerce(cls, x: CycScalar | RationalLike) -> CycScalar:
        return x if isinstance(x, CycScalar) else cls.of(x)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = CycScalar.coerce(other)
        return CycScalar._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-CycScalar.coerce(other))

    def __rsub__(self, other):
        return CycScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (ThetaLinear, FormalTrace)):
            return NotImplemented
        return cyc_mul(self, CycScalar.coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        """Multiplicative inverse, by solving (self * y = 1) as a 4x4 rational system."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        c = self.coeffs
        if not (c[1] or c[2] or c[3]):
            return CycScalar._raw((1 / c[0], c[1], c[2], c[3]))
        basis = [root_of_unity(k) for k in range(DEGREE)]
        # column j of the multiplication matrix is self * zeta^j
        cols = [(self * b).coeffs for b in basis]
        aug = [[cols[j][i] for j in range(DEGREE)] + [Fraction(int(i == 0))] for i in range(DEGREE)]
        for c in range(DEGREE):
            p = next(r for r in range(c, DEGREE) if aug[r][c])
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [x / piv for x in aug[c]]
            for r in range(DEGREE):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CycScalar(tuple(aug[r][DEGREE] for r in range(DEGREE)))

    def __truediv__(self, other):
        other = CycScalar.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> CycScalar:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> CycScalar:
        return cls(tuple(Fraction(s) for s in data))

    def __repr__(self):
        names = ("", "z", "z^2", "z^3")
        parts = [f"{c}{'*' if n else ''}{n}" for c, n in zip(self.coeffs, names) if c]
        return "CycScalar(" + (" + ".join(parts) or "0") + ")"


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    ac, bc = a.coeffs, b.coeffs
    if not (ac[1] or ac[2] or ac[3]):
        if ac[0] == 1:
            return b
        return CycScalar._raw(tuple(ac[0] * y for y in bc))
    if not (bc[1] or bc[2] or bc[3]):
        if bc[0] == 1:
            return a
        return CycScalar._raw(tuple(x * bc[0] for x in ac))
    prod = [Fraction(0)] * (2 * DEGREE - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
    return CycScalar._raw(_reduce(prod))


def root_of_unity(k: int) -> CycScalar:
    """e(k/12) = zeta^k."""
    k %= 12
    poly = [Fraction(0)] * (k + 1)
    poly[k] = Fraction(1)
    return CycScalar(_reduce(poly))


ZERO = CycScalar.of(0)
ONE = CycScalar.of(1)
ZETA = root_of_unity(1)
I = root_of_unity(3)
OMEGA = root_of_unity(2)


@dataclass(frozen=True)
class ThetaLinear:
    """``const + theta_part * theta`` with theta a formal symbol."""

    const: CycScalar = ZERO
    theta: CycScalar = ZERO

    @classmethod
    def coerce(cls, x) -> ThetaLinear:
        if isinstance(x, ThetaLinear):
            return x
        return cls(CycScalar.coerce(x), ZERO)

    def __add__(self, other):
        other = ThetaLinear.coerce(other)
        return ThetaLinear(self.const + other.const, self.theta + other.theta)

    __radd__ = __add__

    def __neg__(self):
        return ThetaLinear(-self.const, -self.theta)

    def __sub__(self, other):
        return self + (-ThetaLinear.coerce(other))

    def __rsub__(self, other):
        return ThetaLinear.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, ThetaLinear):
            if other.theta.is_zero():
                other = other.const
            elif self.theta.is_zero():
                return other * self.const
            else:
                raise TypeError("product of two theta-linear values has degree 2 in theta")
        s = CycScalar.coerce(other)
        return ThetaLinear(self.const * s, self.theta * s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.const.is_zero() and self.theta.is_zero()

    def __repr__(self):
        return f"ThetaLinear({self.const!r} + {self.theta!r}*theta)"


THETA = ThetaLinear(ZERO, ONE)


def flatten(v: ThetaLinear) -> tuple[Fraction, ...]:
    """The 8 rational coordinates of ``v``: constant part first, then theta part."""
    v = ThetaLinear.coerce(v)
    return v.const.coeffs + v.theta.coeffs


def unflatten(coords: Iterable[RationalLike]) -> ThetaLinear:
    coords = [as_rational(c) for c in coords]
    if len(coords) != 2 * DEGREE:
        raise ValueError(f"expected {2 * DEGREE} coordinates, got {len(coords)}")
    return ThetaLinear(CycScalar(tuple(coords[:DEGREE])), CycScalar(tuple(coords[DEGREE:])))


class FormalTrace:
    """Finite sum ``sum_q c_q e(q theta)`` keyed by the rational frequency q.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[RationalLike, CycScalar | RationalLike] | None = None):
        clean: dict[Fraction, CycScalar] = {}
        for q, c in (terms or {}).items():
            q = as_rational(q)
            c = CycScalar.coerce(c) + clean.get(q, ZERO)
            if c.is_zero():
                clean.pop(q, None)
            else:
                clean[q] = c
        self._terms = clean

    @classmethod
    def exp(cls, q: RationalLike, coeff: CycScalar | RationalLike = 1) -> FormalTrace:
        return cls({q: coeff})

    @property
    def terms(self) -> dict[Fraction, CycScalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: FormalTrace) -> FormalTrace:
        return trace_add(self, other)

    def __neg__(self):
        return FormalTrace({q: -c for q, c in self._terms.items()})

    def __sub__(self, other: FormalTrace) -> FormalTrace:
        return trace_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, FormalTrace):
            out: dict[Fraction, CycScalar] = {}
            for q1, c1 in self._terms.items():
                for q2, c2 in other._terms.items():
                    out[q1 + q2] = out.get(q1 + q2, ZERO) + c1 * c2
            return FormalTrace(out)
        s = CycScalar.coerce(other)
        return FormalTrace({q: c * s for q, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalTrace):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "FormalTrace(0)"
        body = " + ".join(f"{c!r}*e({q}θ)" for q, c in sorted(self._terms.items()))
        return f"FormalTrace({body})"


def trace_add(s: FormalTrace, t: FormalTrace) -> FormalTrace:
    merged = dict(s.terms)
    for q, c in t.terms.items():
        merged[q] = merged.get(q, ZERO) + c
    return FormalTrace(merged)
