# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Polynomials over a FieldSpec: division, gcd, reciprocals and orders

Polynomial pins a galois.Poly to the FieldSpec it lives over, so that
polynomials from different fields never mix and text output stays stable.
"""

from dataclasses import dataclass

import galois
import numpy as np

from qsc_toolkit.exceptions import ValidationError
from qsc_toolkit.qsc_toolkit.gf import FieldElement, FieldSpec

__all__ = [
    "Polynomial",
    "poly_divmod",
    "gcd",
    "lcm",
    "reciprocal",
    "is_self_reciprocal",
    "strip_x_power",
    "x_power_mod",
    "order_of",
]


@dataclass(frozen=True, eq=False)
class Polynomial:
    spec: FieldSpec
    poly: galois.Poly = None

    def __post_init__(self):
        GF = self.spec.galois_field
        if self.poly is None:
            object.__setattr__(self, "poly", galois.Poly.Zero(GF))
        elif self.poly.field.order != GF.order:
            raise ValidationError(f"{self.poly} is not a polynomial over {self.spec.label}")

    @classmethod
    def from_ints(cls, spec, values):
        """Coefficients given as integer representations, ascending degree"""
        values = [spec.element(int(v)).value for v in values]
        if not values:
            return cls(spec)
        return cls(spec, galois.Poly(values[::-1], field=spec.galois_field))

    @classmethod
    def constant(cls, spec, c):
        c = spec.scalar(c) if isinstance(c, int) else spec.element(c)
        return cls(spec, galois.Poly([c.value], field=spec.galois_field))

    @classmethod
    def x_n_minus_1(cls, spec, N):
        return cls(spec, galois.Poly.Degrees([N, 0], coeffs=[1, spec.p - 1], field=spec.galois_field))

    @classmethod
    def from_roots(cls, spec, roots):
        """∏ (x - r) over the field of the roots"""
        roots = [spec.element(r).value for r in roots]
        if not roots:
            return cls.constant(spec, 1)
        return cls(spec, galois.Poly.Roots(spec.galois_field(roots)))

    @property
    def degree(self):
        return -1 if self.is_zero else int(self.poly.degree)

    @property
    def is_zero(self):
        return not np.count_nonzero(self.poly.coeffs)

    @property
    def leading(self):
        return self.spec.wrap(self.poly.coeffs[0])

    @property
    def constant_term(self):
        return self.spec.wrap(self.poly.coeffs[-1])

    @property
    def is_monic(self):
        return not self.is_zero and self.leading == self.spec.one

    def ascending(self):
        """Coefficients as a galois array, constant term first"""
        return self.poly.coeffs[::-1]

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.leading.inverse())

    def scale(self, c):
        return Polynomial(self.spec, self.poly * galois.Poly([self.spec.element(c).value], field=self.spec.galois_field))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise ValidationError(f"Cannot combine polynomials over {self.spec.label} and {other.spec.label}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.spec, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and self.to_ints() == other.to_ints()

    def __hash__(self):
        return hash((self.spec, tuple(self.to_ints())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.spec, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.spec, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.spec, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.spec, self.poly * other.poly)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ValidationError("Division by the zero polynomial")
        quotient, remainder = divmod(self.poly, other.poly)
        return Polynomial(self.spec, quotient), Polynomial(self.spec, remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True when self | other"""
        return (other % self).is_zero

    def exact_div(self, other):
        """self / other, failing when the division leaves a remainder"""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ValidationError(f"{other.to_text()} does not divide {self.to_text()}")
        return quotient

    def lift(self, spec, embed):
        """The same polynomial with every coefficient mapped into `spec` by `embed`"""
        return Polynomial.from_ints(spec, [embed(self.spec.element(c)).value for c in self.to_ints()])

    def __call__(self, x, embed=None):
        """Evaluate at x; pass `embed` when x lives in an extension of the coefficient field"""
        poly = self.lift(x.spec, embed) if embed else self
        return x.spec.wrap(poly.poly(x.array))

    def to_ints(self):
        if self.is_zero:
            return []
        return [int(c) for c in self.ascending()]

    def to_text(self):
        """Canonical text "c0 + c1*x + ... + ck*x^k", zero terms omitted"""
        if self.is_zero:
            return "0"

        terms = []
        for i, value in enumerate(self.to_ints()):
            if not value:
                continue
            c = FieldElement(self.spec, value).to_text()
            if i == 0:
                terms.append(c)
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial[{self.spec.label}]({self.to_text()})"


def poly_divmod(a, b):
    """(quotient, remainder) with a = quotient·b + remainder, deg remainder < deg b"""
    return divmod(a, b)


def gcd(a, b):
    """Monic greatest common divisor"""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    return Polynomial(a.spec, galois.gcd(a.poly, b.poly)).monic()


def lcm(a, b):
    if a.is_zero or b.is_zero:
        return Polynomial(a.spec)
    return Polynomial(a.spec, galois.lcm(a.poly, b.poly)).monic()


def reciprocal(h):
    """h(0)^{-1} x^{deg h} h(1/x)"""
    if h.is_zero or h.constant_term.is_zero:
        raise ValidationError(f"Reciprocal needs h(0) ≠ 0, got {h.to_text()}")
    return Polynomial(h.spec, h.poly.reverse()).monic()


def is_self_reciprocal(h):
    return reciprocal(h) == h.monic()


def strip_x_power(f):
    """Split f = x^τ g with g(0) ≠ 0; returns (g, τ)"""
    if f.is_zero:
        return f, 0
    tau = int(min(f.poly.nonzero_degrees))
    shift = galois.Poly.Degrees([tau], field=f.spec.galois_field)
    return Polynomial(f.spec, f.poly // shift), tau


def x_power_mod(e, f):
    """x^e mod f by galois' modular exponentiation"""
    x = galois.Poly.Degrees([1], field=f.spec.galois_field)
    return Polynomial(f.spec, pow(x, e, f.poly))


def order_of(f, N):
    """Least e | N with f(x) | x^e - 1, after stripping any x^τ factor

    The order of f is read as the least e with f(x) | x^e - 1; the literal
    "f(x) | x^e" only holds for powers of x.
    """
    g, _ = strip_x_power(f)
    if g.is_zero:
        raise ValidationError("The zero polynomial has no order")

    one = Polynomial.constant(g.spec, 1)
    if not g.divides(Polynomial.x_n_minus_1(g.spec, N)):
        raise ValidationError(f"{g.to_text()} does not divide x^{N} - 1")

    for e in galois.divisors(N):
        if ((x_power_mod(int(e), g) - one) % g).is_zero:
            return int(e)

    # N itself always qualifies once g | x^N - 1
    return N
