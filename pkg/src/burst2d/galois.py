"""Table-driven arithmetic in GF(2^lam).

Elements are plain ints holding the polynomial-basis bitmask; alpha (the
class of x modulo the primitive polynomial) is ``antilog(1)``.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import (
    DivideByZeroError,
    EvenDimensionError,
    LambdaTooLargeError,
    NotADivisorError,
)

MAX_LAMBDA = 24


def _prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def _x_pow_mod(e: int, poly: int, deg: int) -> int:
    """x^e mod poly over GF(2), by square-and-multiply."""
    result, base = 1, 2 if deg > 1 else 2 ^ poly
    top = 1 << deg
    while e:
        if e & 1:
            result = _polymulmod(result, base, poly, top)
        base = _polymulmod(base, base, poly, top)
        e >>= 1
    return result


def _polymulmod(a: int, b: int, poly: int, top: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def is_primitive(poly: int) -> bool:
    """True iff ``poly`` (degree = bit length - 1) is primitive over GF(2)."""
    deg = poly.bit_length() - 1
    if deg < 1 or not poly & 1:
        return deg == 1 and poly == 0b11
    order = (1 << deg) - 1
    if _x_pow_mod(order, poly, deg) != 1:
        return False
    return all(_x_pow_mod(order // p, poly, deg) != 1 for p in _prime_factors(order))


@lru_cache(maxsize=None)
def default_primitive_poly(lam: int) -> int:
    """Smallest primitive polynomial of degree ``lam`` as a bitmask."""
    for poly in range((1 << lam) | 1, 1 << (lam + 1), 2):
        if is_primitive(poly):
            return poly
    raise ValueError(f"no primitive polynomial of degree {lam}")  # unreachable


def required_lambda(n: int, m: int, max_lambda: int = MAX_LAMBDA) -> int:
    """Smallest lam with lcm(n, m) | 2^lam - 1."""
    if n < 1 or m < 1:
        raise ValueError("dimensions must be positive")
    if n % 2 == 0 or m % 2 == 0:
        raise EvenDimensionError(f"even dimension {n}x{m}: no n-th/m-th roots of unity in GF(2^lam)")
    lcm = n * m // gcd(n, m)
    lam = 1
    while ((1 << lam) - 1) % lcm:
        lam += 1
        if lam > max_lambda:
            raise LambdaTooLargeError(f"lcm({n},{m})={lcm} needs lambda > {max_lambda}")
    return lam


class Field:
    """GF(2^lam) with log/antilog tables. Immutable after construction."""

    __slots__ = ("lam", "primitive_poly", "order", "size", "_exp", "_log")

    def __init__(self, lam: int, primitive_poly: int | None = None):
        if lam < 1:
            raise ValueError("lambda must be positive")
        poly = default_primitive_poly(lam) if primitive_poly is None else primitive_poly
        if poly.bit_length() - 1 != lam or not is_primitive(poly):
            raise ValueError(f"{poly:#x} is not a primitive polynomial of degree {lam}")
        self.lam = lam
        self.primitive_poly = poly
        self.size = 1 << lam
        self.order = self.size - 1
        exp = [0] * (2 * self.order)
        log = [0] * self.size
        x = 1
        for i in range(self.order):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.size:
                x ^= poly
        exp[self.order:] = exp[: self.order]
        self._exp = tuple(exp)
        self._log = tuple(log)

    def __repr__(self):
        return f"Field(lam={self.lam}, primitive_poly={self.primitive_poly:#x})"

    def __reduce__(self):
        return (Field, (self.lam, self.primitive_poly))

    @property
    def alpha(self) -> int:
        return self._exp[1]

    def antilog(self, k: int) -> int:
        return self._exp[k % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivideByZeroError("log of zero")
        return self._log[a]

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivideByZeroError("division by zero in GF(2^%d)" % self.lam)
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        return self.div(1, a)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivideByZeroError("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self.order]

    def in_subfield(self, a: int, d: int) -> bool:
        """True iff ``a`` lies in the subfield GF(2^d)."""
        if d < 1 or self.lam % d:
            raise NotADivisorError(f"{d} does not divide lambda={self.lam}")
        return self.pow(a, 1 << d) == a

    def subfield_generator(self, d: int) -> int:
        """A generator of the multiplicative group of GF(2^d) inside this field."""
        if d < 1 or self.lam % d:
            raise NotADivisorError(f"{d} does not divide lambda={self.lam}")
        return self.antilog(self.order // ((1 << d) - 1))

    def fmt(self, a: int) -> str:
        """Alpha-exponent notation: ``"0"`` or ``"a<k>"``."""
        return "0" if a == 0 else f"a{self._log[a]}"

    def elements(self):
        return range(self.size)


@lru_cache(maxsize=64)
def field_for_lambda(lam: int, primitive_poly: int | None = None) -> Field:
    return Field(lam, primitive_poly)


def build_field(n: int, m: int, max_lambda: int = MAX_LAMBDA) -> Field:
    """Field for an n x m code: smallest lam with lcm(n, m) | 2^lam - 1."""
    return field_for_lambda(required_lambda(n, m, max_lambda))
