"""Exact arithmetic in GF(p^r).

Elements are identified with their integer encoding ``sum(c[i] * p**i)``,
which is also the vertex numbering used by every construction over a field.
The modulus and the primitive root are chosen deterministically (least in a
fixed order), so two fields of the same order are always identical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import DivisionByZero, InvalidPrimePower, NoQuarticStructure, ZeroInput


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    r: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InvalidPrimePower(f"{self.p} is not prime")
        if not isinstance(self.r, int) or self.r < 1:
            raise InvalidPrimePower(f"exponent must be >= 1, got {self.r}")
        if self.p**self.r >= 2**64:
            raise InvalidPrimePower(f"{self.p}^{self.r} does not fit in 64 bits")

    @property
    def q(self) -> int:
        return self.p**self.r

    @classmethod
    def from_order(cls, q: int) -> "PrimePower":
        """Split ``q`` into ``p**r``; raises if ``q`` is not a prime power."""
        if not isinstance(q, int) or q < 2:
            raise InvalidPrimePower(f"{q} is not a prime power")
        factors = prime_factors(q)
        if len(factors) != 1:
            raise InvalidPrimePower(f"{q} is not a prime power")
        p = factors[0]
        r = 0
        while q > 1:
            q //= p
            r += 1
        return cls(p, r)


# --- polynomials over Z_p, coefficient lists low-to-high -----------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility test of a monic polynomial over Z_p."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(m, divisor, p):
                return False
    return True


def least_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Least monic irreducible of degree r, ordered by (c_{r-1}, ..., c_0)."""
    for high_to_low in itertools.product(range(p), repeat=r):
        m = list(reversed(high_to_low)) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# --- the field ---------------------------------------------------------------

ElementLike = Union["FieldElement", int]


@dataclass(frozen=True, eq=False)
class FieldElement:
    coeffs: tuple[int, ...]
    field: "Field" = dc_field(repr=False)

    def __int__(self) -> int:
        return self.field.encode(self.coeffs)

    def __index__(self) -> int:
        return int(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return int(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __rsub__(self, other):
        return self.field.sub(other, self)

    def __neg__(self):
        return self.field.neg(self)

    def __mul__(self, other):
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, e: int):
        return self.field.pow(self, e)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


class Field:
    """GF(p^r) with a fixed modulus and primitive root.

    Multiplication goes through exponent/log tables built from the primitive
    root; the polynomial route (``poly_mul``) is kept for table construction
    and for cross-checking.
    """

    def __init__(self, order: PrimePower):
        self.order = order
        self.p, self.r, self.q = order.p, order.r, order.q
        self.modulus: tuple[int, ...] = least_irreducible(self.p, self.r)
        self._place = [self.p**i for i in range(self.r)]
        self.digits = np.array(
            [self.decode(a) for a in range(self.q)], dtype=np.int64
        ).reshape(self.q, self.r)

        w = self._find_primitive_root()
        self._exp = [0] * (self.q - 1)
        self._log = [-1] * self.q
        x = self.one.coeffs
        for i in range(self.q - 1):
            a = self.encode(x)
            self._exp[i] = a
            self._log[a] = i
            x = self.poly_mul(x, w.coeffs)
        self.primitive_root = w
        self.fourth_root = (
            self.element(self._exp[(self.q - 1) // 4]) if (self.q - 1) % 4 == 0 else None
        )

    def __repr__(self) -> str:
        return f"Field(GF({self.p}^{self.r}), modulus={self.modulus})"

    # encoding ---------------------------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._place))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def element(self, value: ElementLike | Sequence[int]) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if self.r == 1:
                value %= self.p
            elif not 0 <= value < self.q:
                raise ValueError(f"encoding {value} out of range for GF({self.q})")
            return FieldElement(self.decode(value), self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.r:
            raise ValueError(f"expected {self.r} coefficients")
        return FieldElement(coeffs, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.r, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.r - 1), self)

    def elements(self) -> Iterator[FieldElement]:
        for a in range(self.q):
            yield FieldElement(self.decode(a), self)

    # arithmetic -------------------------------------------------------------

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        """Multiply two coefficient vectors and reduce modulo the modulus."""
        rem = _poly_mod(_poly_mul(a, b, self.p), self.modulus, self.p)
        return tuple(rem + [0] * (self.r - len(rem)))

    def _poly_pow(self, a: Sequence[int], e: int) -> tuple[int, ...]:
        result = self.one.coeffs
        base = tuple(a)
        while e:
            if e & 1:
                result = self.poly_mul(result, base)
            base = self.poly_mul(base, base)
            e >>= 1
        return result

    def _find_primitive_root(self) -> FieldElement:
        n = self.q - 1
        one = self.one.coeffs
        ell = prime_factors(n)
        for a in range(1, self.q):
            c = self.decode(a)
            if all(self._poly_pow(c, n // l) != one for l in ell):
                return FieldElement(c, self)
        raise AssertionError("no primitive root")  # pragma: no cover

    def add(self, a: ElementLike, b: ElementLike) -> FieldElement:
        a, b = self.element(a), self.element(b)
        return FieldElement(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)), self)

    def neg(self, a: ElementLike) -> FieldElement:
        a = self.element(a)
        return FieldElement(tuple(-x % self.p for x in a.coeffs), self)

    def sub(self, a: ElementLike, b: ElementLike) -> FieldElement:
        return self.add(a, self.neg(b))

    def mul(self, a: ElementLike, b: ElementLike) -> FieldElement:
        a, b = self.element(a), self.element(b)
        if a.is_zero() or b.is_zero():
            return self.zero
        la, lb = self._log[int(a)], self._log[int(b)]
        return self.element(self._exp[(la + lb) % (self.q - 1)])

    def inv(self, a: ElementLike) -> FieldElement:
        a = self.element(a)
        if a.is_zero():
            raise DivisionByZero("inverse of zero")
        return self.element(self._exp[-self._log[int(a)] % (self.q - 1)])

    def pow(self, a: ElementLike, e: int) -> FieldElement:
        a = self.element(a)
        if a.is_zero():
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self.one if e == 0 else self.zero
        return self.element(self._exp[(self._log[int(a)] * e) % (self.q - 1)])

    def log(self, a: ElementLike) -> int:
        """Discrete logarithm to the base of the primitive root."""
        a = self.element(a)
        if a.is_zero():
            raise ZeroInput("log of zero")
        return self._log[int(a)]

    # classes of nonzero elements ---------------------------------------------

    def is_square(self, a: ElementLike) -> bool:
        a = self.element(a)
        if a.is_zero():
            raise ZeroInput("square test of zero")
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == self.one

    def quartic_class(self, a: ElementLike) -> int:
        """Residue mod 4 of the discrete log of ``a``."""
        if self.fourth_root is None:
            raise NoQuarticStructure(f"4 does not divide {self.q} - 1")
        a = self.element(a)
        if a.is_zero():
            raise ZeroInput("quartic class of zero")
        t = self.pow(a, (self.q - 1) // 4)
        for i in range(4):
            if t == self.pow(self.fourth_root, i):
                return i
        raise AssertionError("fourth power class not found")  # pragma: no cover

    # vectorized helpers for graph constructions ------------------------------

    def difference_table(self) -> np.ndarray:
        """``D[x, y]`` = encoding of ``x - y`` for all encodings x, y."""
        diff = (self.digits[:, None, :] - self.digits[None, :, :]) % self.p
        return diff @ np.array(self._place, dtype=np.int64)

    def class_lookup(self, classifier) -> np.ndarray:
        """Array over encodings; entry 0 is -1, others ``classifier(element)``."""
        out = np.full(self.q, -1, dtype=np.int64)
        for a in range(1, self.q):
            out[a] = classifier(self.element(a))
        return out


@lru_cache(maxsize=None)
def make_field(pp: PrimePower | int) -> Field:
    """Build (and cache) GF(q). Accepts a PrimePower or the order q itself."""
    if isinstance(pp, int):
        pp = PrimePower.from_order(pp)
    return Field(pp)


def field_arith(f: Field, op: str, a: ElementLike, b=None) -> FieldElement:
    if op == "add":
        return f.add(a, b)
    if op == "sub":
        return f.sub(a, b)
    if op == "mul":
        return f.mul(a, b)
    if op == "inv":
        return f.inv(a)
    if op == "pow":
        return f.pow(a, b)
    raise ValueError(f"unknown operation {op!r}")


def is_square(f: Field, a: ElementLike) -> bool:
    return f.is_square(a)


def quartic_class(f: Field, a: ElementLike) -> int:
    return f.quartic_class(a)
