# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Finite fields GF(p), GF(p^a) and the tower GF(q) ⊆ GF(q^t)

Arithmetic runs on galois FieldArray classes. FieldSpec fixes the modulus so
that runs are reproducible; FieldElement is a hashable handle on one element
in galois' integer representation. The top field of a tower is GF(p^{a·t})
under a single modulus, and GF(q) sits inside it through a root of the base
modulus.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property

import galois

from qsc_toolkit.exceptions import ValidationError, VerificationError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "TowerSpec",
    "find_irreducible",
    "split_prime_power",
    "multiplicative_order",
    "build_tower",
    "primitive_nth_root",
    "is_in_subfield",
    "project_to_base",
]

log = logging.getLogger(__name__)

# exponents above this go through square and multiply instead of np.power
NATIVE_EXPONENT_LIMIT = 2**62


def find_irreducible(p, m, seed=0):
    """First monic irreducible polynomial of degree m over GF(p)

    Candidates x^m + c_{m-1}x^{m-1} + ... + c_0 are visited in lexicographic
    order of (c_{m-1}, ..., c_0), starting at position `seed` and wrapping
    around. Returns a galois.Poly over GF(p).
    """
    if m < 1:
        raise ValidationError(f"Degree must be at least 1, got {m}")

    prime_field = galois.GF(p)
    count = p**m
    start = seed % count

    for offset in range(count):
        poly = galois.Poly.Int(count + (start + offset) % count, field=prime_field)
        if poly.is_irreducible():
            log.debug("irreducible of degree %s over GF(%s): %s", m, p, poly)
            return poly

    # every degree has irreducibles, so the loop always returns
    raise VerificationError(f"No irreducible polynomial of degree {m} over GF({p})")


def split_prime_power(q):
    """Return (p, a) with q = p^a for an odd prime p"""
    if q < 3 or not galois.is_prime_power(q):
        raise ValidationError(f"q = {q} is not a prime power")

    primes, exponents = galois.factors(q)
    p, a = int(primes[0]), int(exponents[0])
    if p == 2:
        raise ValidationError(f"q = {q} has characteristic 2; an odd characteristic is required")
    return p, a


def multiplicative_order(q, N):
    """Least e ≥ 1 with q^e ≡ 1 (mod N)"""
    if N == 1:
        return 1
    value, e = q % N, 1
    while value != 1:
        if value == 0 or e > N:
            raise ValidationError(f"{q} is not invertible modulo {N}")
        value = value * q % N
        e += 1
    return e


@dataclass(frozen=True)
class FieldSpec:
    p: int
    a: int = 1
    # ascending coefficients of the monic modulus; empty for prime fields
    modulus: tuple = ()

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.p % 2 == 0 or not galois.is_prime(self.p):
            raise ValidationError(f"Characteristic must be an odd prime, got {self.p}")

        if self.a < 1:
            raise ValidationError(f"Extension degree must be at least 1, got {self.a}")

        if self.a == 1:
            if self.modulus:
                raise ValidationError("A prime field takes no modulus")
            return

        if len(self.modulus) != self.a + 1 or self.modulus[-1] != 1:
            raise ValidationError(f"Modulus must be monic of degree {self.a}")

        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValidationError(f"Modulus coefficients must lie in [0, {self.p})")

        if not self.modulus_poly().is_irreducible():
            raise ValidationError(f"Modulus {self.modulus_poly()} is reducible over GF({self.p})")

    @classmethod
    def from_modulus(cls, poly):
        """Build GF(p^deg) from a monic irreducible galois.Poly over GF(p)"""
        p = int(poly.field.characteristic)
        if poly.degree == 1:
            return cls(p)
        return cls(p, poly.degree, tuple(int(c) for c in reversed(poly.coeffs)))

    @property
    def order(self):
        return self.p**self.a

    @property
    def label(self):
        return f"GF({self.p})" if self.a == 1 else f"GF({self.p}^{self.a})"

    def modulus_poly(self):
        return galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))

    @cached_property
    def galois_field(self):
        """The galois FieldArray class for this modulus"""
        if self.a == 1:
            return galois.GF(self.p)
        return galois.GF(self.order, irreducible_poly=self.modulus_poly())

    @cached_property
    def zero(self):
        return FieldElement(self, 0)

    @cached_property
    def one(self):
        return FieldElement(self, 1)

    def scalar(self, value):
        """Image of an integer in the prime subfield"""
        return FieldElement(self, value % self.p)

    def wrap(self, array):
        """FieldElement for a 0-d galois array of this field"""
        return FieldElement(self, int(array))

    def element(self, value):
        """Element from its integer representation Σ c_i p^i, or from an ascending coefficient sequence"""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValidationError(f"{value!r} does not belong to {self.label}")
            return value

        if isinstance(value, int):
            if self.a == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.order:
                raise ValidationError(f"Integer {value} is outside [0, {self.order})")
            return FieldElement(self, value)

        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.a:
            raise ValidationError(f"{self.label} elements have {self.a} coefficients, got {len(coeffs)}")
        return FieldElement(self, sum(c * self.p**i for i, c in enumerate(coeffs)))

    def elements(self):
        for value in range(self.order):
            yield FieldElement(self, value)

    def random_element(self, rng, nonzero=False):
        low = 1 if nonzero else 0
        return FieldElement(self, rng.randrange(low, self.order))


@dataclass(frozen=True, slots=True)
class FieldElement:
    spec: FieldSpec
    # galois integer representation
    value: int

    @property
    def array(self):
        return self.spec.galois_field(self.value)

    @property
    def coeffs(self):
        """Ascending coefficients over GF(p)"""
        digits, value = [], self.value
        for _ in range(self.spec.a):
            value, digit = divmod(value, self.spec.p)
            digits.append(digit)
        return tuple(digits)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValidationError(f"Cannot combine elements of {self.spec.label} and {other.spec.label}")
            return other
        if isinstance(other, int):
            return self.spec.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.wrap(self.array + other.array)

    __radd__ = __add__

    def __neg__(self):
        return self.spec.wrap(-self.array)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.wrap(self.array - other.array)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.wrap(self.array * other.array)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ValidationError(f"Cannot invert zero in {self.spec.label}")
        return self.spec.wrap(self.spec.galois_field(1) / self.array)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        if not self.is_zero:
            exponent %= self.spec.order - 1
        if exponent < NATIVE_EXPONENT_LIMIT:
            return self.spec.wrap(self.array**exponent)

        # exponents past int64, only reached in top fields above 2^63 elements
        result, base = self.spec.galois_field(1), self.array
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return self.spec.wrap(result)

    @property
    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def to_text(self):
        if self.spec.a == 1:
            return str(self.value)
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"{self.spec.label}:{self.to_text()}"


@dataclass(frozen=True)
class TowerSpec:
    base: FieldSpec
    top: FieldSpec
    t: int
    # image of the base generator y (a root of the base modulus in the top field)
    image: FieldElement = field(repr=False)

    @cached_property
    def basis_images(self):
        """Top-field images of 1, y, ..., y^{a-1}"""
        return tuple(self.image**i for i in range(self.base.a))

    def embed(self, c):
        """Injective ring map GF(q) → GF(q^t)"""
        c = self.base.element(c)
        if self.base.a == 1:
            return self.top.scalar(c.value)
        result = self.top.zero
        for coeff, power in zip(c.coeffs, self.basis_images):
            if coeff:
                result = result + power * coeff
        return result

    @cached_property
    def preimages(self):
        return {self.embed(c).value: c for c in self.base.elements()}

    def is_in_subfield(self, x):
        """x^q = x, the Frobenius fixed-point test"""
        x = self.top.element(x)
        return x**self.base.order == x

    def project_to_base(self, x):
        x = self.top.element(x)
        try:
            return self.preimages[x.value]
        except KeyError:
            raise ValidationError(f"{x!r} does not lie in the embedded {self.base.label}")

    def spot_check(self, count, rng=None):
        """Check the embedding is a ring homomorphism into the Frobenius-fixed subfield"""
        rng = rng or random.Random(0)
        for _ in range(count):
            x, y = self.base.random_element(rng), self.base.random_element(rng)
            ex, ey = self.embed(x), self.embed(y)
            if self.embed(x + y) != ex + ey or self.embed(x * y) != ex * ey:
                raise VerificationError(f"Embedding of {self.base.label} is not a homomorphism at {x!r}, {y!r}")
            if not self.is_in_subfield(ex):
                raise VerificationError(f"Embedded {x!r} is not fixed by Frobenius")


def build_tower(q, N, seed=0, max_degree=None, spot_checks=32):
    """GF(q) ⊆ GF(q^t) with t = ord(q mod N), so that N | q^t - 1"""
    p, a = split_prime_power(q)
    base = FieldSpec.from_modulus(find_irreducible(p, a, seed)) if a > 1 else FieldSpec(p)

    t = multiplicative_order(q, N)
    if max_degree and t > max_degree:
        raise ValidationError(
            f"Length {N} over GF({q}) needs GF({q}^{t}); the configured limit is degree {max_degree}"
        )

    if t == 1:
        top = base
        image = base.element((0, 1)) if a > 1 else base.one
    else:
        top = FieldSpec.from_modulus(find_irreducible(p, a * t, seed))
        image = _base_root(top, base) if a > 1 else top.one

    tower = TowerSpec(base, top, t, image)
    tower.spot_check(spot_checks)
    log.info("tower %s ⊆ %s built for N=%s (t=%s)", base.label, top.label, N, t)
    return tower


def _base_root(top, base):
    """First root of the base modulus among the powers of a generator of the embedded GF(q)*

    The roots all lie in the q - 1 nonzero elements of the subfield, so only
    those are evaluated rather than the whole top field.
    """
    GF = top.galois_field
    modulus = galois.Poly(list(reversed(base.modulus)), field=GF)
    generator = top.wrap(GF.primitive_element) ** ((top.order - 1) // (base.order - 1))

    z = top.one
    for _ in range(base.order - 1):
        if modulus(z.array) == 0:
            return z
        z = z * generator

    raise VerificationError(f"Base modulus of {base.label} has no root in {top.label}")


def primitive_nth_root(tower, N):
    """α = γ^((q^t - 1)/N) for galois' least primitive element γ of the top field"""
    top = tower.top
    if (top.order - 1) % N:
        raise ValidationError(f"N = {N} does not divide q^t - 1 = {top.order - 1}")
    if N == 1:
        return top.one

    alpha = top.wrap(top.galois_field.primitive_element) ** ((top.order - 1) // N)
    primes, _ = galois.factors(N)
    if alpha**N != top.one or any(alpha ** (N // int(ell)) == top.one for ell in primes):
        raise VerificationError(f"{alpha!r} does not have multiplicative order {N}")
    return alpha


def is_in_subfield(x, tower):
    return tower.is_in_subfield(x)


def project_to_base(x, tower):
    return tower.project_to_base(x)
