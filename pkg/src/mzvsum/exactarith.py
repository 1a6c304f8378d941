"""Exact arithmetic kernel: rationals, pi-graded values, and cyclotomic integers.

Three layers, all immutable and safe to share between threads:

* rationals are ``fractions.Fraction`` (always reduced, positive denominator),
  serialized as ``"p/q"`` with the denominator omitted when it is 1;
* :class:`PiValue` is an exact rational multiple of a fixed power of pi, the
  result type of every even-weight closed form in this package;
* :class:`Cyclo` is an element of the cyclotomic field Q(w), w = exp(2*pi*i/N),
  stored as a rational vector on the power basis 1, w, ..., w^(phi(N)-1),
  i.e. reduced modulo the N-th cyclotomic polynomial.  Canonical reduction
  makes equality a plain coefficient comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import GradeMismatchError, NotRationalError, OrderMismatchError

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Rational serialization
# ---------------------------------------------------------------------------

def format_rational(q: Fraction) -> str:
    """Render a rational as ``"p/q"``, omitting ``/q`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational` (also accepts plain integers)."""
    return Fraction(text.strip())


def latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


# ---------------------------------------------------------------------------
# Pi-graded exact values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiValue:
    """An exact value ``coeff * pi**pi_exp``.

    The exponent is part of the type's bookkeeping: adding two values with
    different exponents raises :class:`GradeMismatchError` unless one of them
    is zero.  This deliberately turns weight-counting mistakes in formulas
    into hard errors instead of silently wrong rationals.
    """

    coeff: Fraction
    pi_exp: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.pi_exp < 0:
            raise ValueError(f"pi exponent must be nonnegative, got {self.pi_exp}")

    @staticmethod
    def one() -> "PiValue":
        return PiValue(Fraction(1), 0)

    @staticmethod
    def zero(pi_exp: int = 0) -> "PiValue":
        return PiValue(Fraction(0), pi_exp)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiValue):
            return NotImplemented
        if self.coeff == 0 and other.coeff == 0:
            return True
        return self.coeff == other.coeff and self.pi_exp == other.pi_exp

    def __hash__(self) -> int:
        return hash((self.coeff, self.pi_exp if self.coeff else 0))

    def __add__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_exp != other.pi_exp:
            raise GradeMismatchError(
                f"cannot add pi^{self.pi_exp} and pi^{other.pi_exp} terms")
        return PiValue(self.coeff + other.coeff, self.pi_exp)

    def __neg__(self) -> "PiValue":
        return PiValue(-self.coeff, self.pi_exp)

    def __sub__(self, other: "PiValue") -> "PiValue":
        return self + (-other)

    def __mul__(self, other: Union["PiValue", Scalar]) -> "PiValue":
        if isinstance(other, PiValue):
            return PiValue(self.coeff * other.coeff, self.pi_exp + other.pi_exp)
        if isinstance(other, (int, Fraction)):
            return PiValue(self.coeff * other, self.pi_exp)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "PiValue":
        if isinstance(other, (int, Fraction)):
            return PiValue(self.coeff / other, self.pi_exp)
        return NotImplemented

    def __pow__(self, exponent: int) -> "PiValue":
        if exponent < 0:
            raise ValueError("negative powers of pi-graded values are not defined")
        return PiValue(self.coeff ** exponent, self.pi_exp * exponent)

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_exp": self.pi_exp}

    @staticmethod
    def from_json(obj: dict) -> "PiValue":
        return PiValue(parse_rational(obj["coeff"]), int(obj["pi_exp"]))

    def latex(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.pi_exp == 0:
            return latex_rational(self.coeff)
        pi_part = r"\pi" if self.pi_exp == 1 else rf"\pi^{{{self.pi_exp}}}"
        if self.coeff == 1:
            return pi_part
        if self.coeff == -1:
            return "-" + pi_part
        return latex_rational(self.coeff) + pi_part

    def __repr__(self) -> str:
        return f"PiValue({format_rational(self.coeff)!r}, pi_exp={self.pi_exp})"


# ---------------------------------------------------------------------------
# Integer polynomials (dense, ascending) -- just enough for cyclotomics
# ---------------------------------------------------------------------------

def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_exact(num: list, den: list) -> list:
    """Quotient of an exact division by a monic integer polynomial."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        q[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was expected to be exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple:
    """Coefficients of the cyclotomic polynomial Phi_N, ascending, monic.

    Computed by dividing x^N - 1 by Phi_d over all proper divisors d of N,
    so that the product identity x^N - 1 = prod_{d | N} Phi_d holds by
    construction.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# ---------------------------------------------------------------------------
# Cyclotomic field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclo:
    """Element of Q(w), w = exp(2*pi*i/order), on the basis 1, w, .., w^(phi-1).

    Instances are always canonically reduced, so ``==`` is coefficient
    equality.  Binary operations require equal orders; use :meth:`embed` to
    move both operands into a common field Q(w_lcm) first.
    """

    order: int
    coeffs: tuple

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_coeffs(order: int, raw: Iterable[Scalar]) -> "Cyclo":
        """Build from coefficients of powers w^0, w^1, ... (any length), reducing."""
        return Cyclo(order, _reduce(order, [Fraction(c) for c in raw]))

    @staticmethod
    def root(order: int, power: int = 1) -> "Cyclo":
        """The root of unity w^power in Q(w_order)."""
        power %= order
        raw = [Fraction(0)] * (power + 1)
        raw[power] = Fraction(1)
        return Cyclo.from_coeffs(order, raw)

    @staticmethod
    def from_rational(order: int, value: Scalar) -> "Cyclo":
        return Cyclo.from_coeffs(order, [Fraction(value)])

    @staticmethod
    def zero(order: int) -> "Cyclo":
        return Cyclo.from_rational(order, 0)

    @staticmethod
    def one(order: int) -> "Cyclo":
        return Cyclo.from_rational(order, 1)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} differ; embed() first")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "Cyclo":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.order,
                     tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "Cyclo":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclo":
        return (-self) + other

    def __mul__(self, other) -> "Cyclo":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Cyclo(self.order, tuple(a * f for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = len(self.coeffs)
        raw = [Fraction(0)] * (2 * n - 1) if n else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        return Cyclo(self.order, _reduce(self.order, raw))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Cyclo":
        # Scalar division only; the closed forms never need field inversion.
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Cyclo(self.order, tuple(a / f for a in self.coeffs))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Cyclo":
        if exponent < 0:
            raise ValueError("negative cyclotomic powers are not supported")
        result = Cyclo.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure maps -----------------------------------------------------

    def conj(self) -> "Cyclo":
        """Complex conjugation, the automorphism induced by w -> w^(order-1)."""
        n = self.order
        raw = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            raw[(n - j) % n] += c
        return Cyclo(n, _reduce(n, raw))

    def imag_times_2i(self) -> "Cyclo":
        """2*i*Im(self), i.e. self - conj(self).

        Dividing by 2i is the caller's job; when 4 | order the unit i is
        available as ``Cyclo.root(order, order // 4)`` and 1/(2i) = -i/2.
        """
        return self - self.conj()

    def embed(self, new_order: int) -> "Cyclo":
        """Image of self in Q(w_new) where order | new_order (index scaling)."""
        if new_order % self.order != 0:
            raise OrderMismatchError(
                f"cannot embed order {self.order} into {new_order}")
        scale = new_order // self.order
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * scale + 1)
        for j, c in enumerate(self.coeffs):
            raw[j * scale] += c
        return Cyclo(new_order, _reduce(new_order, raw))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        """The value as a Fraction, or NotRationalError if it is not in Q."""
        if not self.is_rational():
            raise NotRationalError(
                f"value has nonzero coordinates beyond the constant: {self}")
        return self.coeffs[0]

    # -- comparisons / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclo):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(format_rational(c))
            else:
                mono = f"w{j}" if j > 1 else "w"
                parts.append(mono if c == 1 else f"({format_rational(c)})*{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Cyclo(order={self.order}, {self})"


@lru_cache(maxsize=None)
def _modulus(order: int) -> tuple:
    return cyclotomic_polynomial(order)


def _reduce(order: int, raw: list) -> tuple:
    """Reduce a raw coefficient list modulo Phi_order; returns phi(order) coeffs."""
    phi = _modulus(order)
    deg = len(phi) - 1
    raw = list(raw)
    for top in range(len(raw) - 1, deg - 1, -1):
        c = raw[top]
        if c:
            raw[top] = Fraction(0)
            base = top - deg
            for i in range(deg):
                raw[base + i] -= c * phi[i]
    out = raw[:deg]
    out.extend([Fraction(0)] * (deg - len(out)))
    return tuple(out)
