"""Exact arithmetic in Q(w) for a primitive root of unity w of prime order.

Elements are stored in the power basis {1, w, ..., w^(n-2)} with Fraction
coefficients; w^(n-1) is always eliminated through 1 + w + ... + w^(n-1) = 0,
so equality and zero tests are exact coefficient comparisons.  Order 4 is also
supported (basis {1, i}, needed for the two-dimensional MU set) and order 2
degenerates to the rationals with w = -1.

The module-level ``_raw_*`` helpers implement the same arithmetic on bare
coefficient lists; they accept ints as well as Fractions and are reused by the
fraction-free linear algebra and the search engines, where plain integers are
much faster than wrapped objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mod_inverse(a: int, d: int) -> int:
    """Multiplicative inverse of a modulo the prime d, in {1..d-1}."""
    if a % d == 0:
        raise ValueError(f"{a} is divisible by {d}, no inverse exists")
    return pow(a, -1, d)


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; the Legendre symbol for prime n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs a positive odd modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def degree(order: int) -> int:
    """Degree of Q(w) over Q: order-1 for prime order, 2 for order 4."""
    return 2 if order == 4 else order - 1


def _check_order(order: int) -> None:
    if order != 4 and not is_prime(order):
        raise ValueError(f"unsupported root-of-unity order {order}")


# Raw coefficient-list arithmetic.  Vectors have length degree(order) and may
# hold ints or Fractions; all helpers return new lists.

def _raw_zero(order: int) -> list:
    return [0] * degree(order)


def _raw_one(order: int) -> list:
    v = [0] * degree(order)
    v[0] = 1
    return v


def _raw_canon(order: int, buf: list) -> list:
    """Fold a length-``order`` exponent buffer into the power basis."""
    top = buf[order - 1]
    if top:
        return [buf[e] - top for e in range(order - 1)]
    return buf[: order - 1]


def _raw_root_power(order: int, e: int) -> list:
    e %= order
    if order == 4:
        return [[1, 0], [0, 1], [-1, 0], [0, -1]][e]
    v = [0] * order
    v[e] = 1
    return _raw_canon(order, v)


def _raw_add(u: list, v: list) -> list:
    return [a + b for a, b in zip(u, v)]


def _raw_sub(u: list, v: list) -> list:
    return [a - b for a, b in zip(u, v)]


def _raw_neg(u: list) -> list:
    return [-a for a in u]


def _raw_scale(u: list, s) -> list:
    return [a * s for a in u]


def _raw_mul(order: int, u: list, v: list) -> list:
    if order == 4:
        a0, a1 = u
        b0, b1 = v
        return [a0 * b0 - a1 * b1, a0 * b1 + a1 * b0]
    buf = [0] * order
    for i, ci in enumerate(u):
        if ci:
            for j, cj in enumerate(v):
                if cj:
                    buf[(i + j) % order] += ci * cj
    return _raw_canon(order, buf)


def _raw_shift_mul(order: int, u: list, e: int) -> list:
    """Multiply by w^e: cheap exponent rotation instead of a full product."""
    e %= order
    if order == 4:
        a0, a1 = u
        return [[a0, a1], [-a1, a0], [-a0, -a1], [a1, -a0]][e]
    if e == 0:
        return list(u)
    buf = [0] * order
    for i, ci in enumerate(u):
        if ci:
            buf[(i + e) % order] += ci
    return _raw_canon(order, buf)


def _raw_conj(order: int, u: list) -> list:
    """Complex conjugation, w^e -> w^(-e)."""
    if order == 4:
        return [u[0], -u[1]]
    buf = [0] * order
    for e, c in enumerate(u):
        if c:
            buf[(order - e) % order] += c
    return _raw_canon(order, buf)


def _raw_galois(order: int, u: list, k: int) -> list:
    """Galois automorphism w -> w^k (k coprime to the prime order)."""
    buf = [0] * order
    for e, c in enumerate(u):
        if c:
            buf[(k * e) % order] += c
    return _raw_canon(order, buf)


def _raw_is_zero(u: list) -> bool:
    return all(c == 0 for c in u)


def _raw_inverse_pair(order: int, u: list) -> tuple[list, object]:
    """Return (v, n) with u*v == n, n a nonzero rational scalar.

    v is the product of the nontrivial Galois conjugates of u and n is the
    field norm, so u^-1 = v/n.  Used for exact division in Bareiss elimination.
    """
    if _raw_is_zero(u):
        raise ZeroDivisionError("inverse of zero cyclotomic element")
    if order == 4:
        return [u[0], -u[1]], u[0] * u[0] + u[1] * u[1]
    v = _raw_one(order)
    for k in range(2, order):
        v = _raw_mul(order, v, _raw_galois(order, u, k))
    prod = _raw_mul(order, u, v)
    n = prod[0]
    if any(prod[e] for e in range(1, order - 1)):  # norm must land in Q
        raise ArithmeticError("field norm computation is inconsistent")
    return v, n


class Cyclotomic:
    """Immutable exact element of Q(w), w = exp(2*pi*i/order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence):
        _check_order(order)
        deg = degree(order)
        if len(coeffs) != deg:
            raise ValueError(f"order {order} needs {deg} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls(order, _raw_zero(order))

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls(order, _raw_one(order))

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        v = _raw_zero(order)
        v[0] = Fraction(value)
        return cls(order, v)

    @classmethod
    def root_power(cls, order: int, e: int) -> "Cyclotomic":
        """w^e, reduced to the power basis."""
        return cls(order, _raw_root_power(order, e))

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise DimensionMismatchError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, _raw_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, _raw_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclotomic(self.order, _raw_neg(self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, _raw_mul(self.order, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        v, n = _raw_inverse_pair(self.order, list(self.coeffs))
        return Cyclotomic(self.order, [c / n for c in v])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = Cyclotomic.one(self.order)
        base = self
        n = exponent
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conjugate(self) -> "Cyclotomic":
        return Cyclotomic(self.order, _raw_conj(self.order, self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __complex__(self) -> complex:
        import cmath

        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * w**e for e, c in enumerate(self.coeffs))

    def to_strings(self) -> list[str]:
        """Serialize as exact "num/den" strings, one per power-basis coefficient."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_strings(cls, order: int, parts: Sequence[str]) -> "Cyclotomic":
        return cls(order, [Fraction(p) for p in parts])

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        sym = "i" if self.order == 4 else "w"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                power = sym if e == 1 else f"{sym}^{e}"
                terms.append(("-" if c < 0 else "+") + f"{mag}{power}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[1:] if text.startswith("+") else text


def gauss_sum(d: int, a: int, shift: int = 0) -> Cyclotomic:
    """Exact scaled quadratic Gauss sum: sum over x of w^(a*x^2 + shift*x), mod d.

    d must be an odd prime and a nonzero mod d.  The closed form is
    w^(-shift^2 * chi) * (a/d) * g with 4*a*chi = 1 mod d and g = gauss_sum(d, 1, 0);
    g replaces the irrational sqrt(d) inside exact arithmetic via
    g^2 = (-1)^((d-1)/2) * d.
    """
    if d == 2 or not is_prime(d):
        raise ValueError(f"Gauss sums need an odd prime modulus, got {d}")
    if a % d == 0:
        raise ValueError(f"degenerate Gauss sum: {a} vanishes mod {d}")
    buf = [0] * d
    for x in range(d):
        buf[(a * x * x + shift * x) % d] += 1
    return Cyclotomic(d, _raw_canon(d, buf))


@dataclass(frozen=True)
class QuadraticGaussElement:
    """The in-field stand-in g for sqrt(d): g = sum over x of w^(x^2)."""

    dim: int
    value: Cyclotomic

    @classmethod
    def for_dimension(cls, d: int) -> "QuadraticGaussElement":
        return cls(dim=d, value=gauss_sum(d, 1, 0))

    def squared_expected(self) -> int:
        """g^2 as a rational integer: d when d = 1 mod 4, -d when d = 3 mod 4."""
        return self.dim if self.dim % 4 == 1 else -self.dim
