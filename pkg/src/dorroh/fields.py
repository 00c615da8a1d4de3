"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over Q and ``int``
residues in ``[0, p)`` over GF(p).  A :class:`Field` knows how to coerce,
reduce, invert and print them; arithmetic itself uses the native operators
followed by :meth:`Field.reduce`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

Scalar = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*(?:mod\s+(\d+))?\s*$")


class FieldError(ValueError):
    """A scalar does not live in the requested field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Base class; use :data:`Q` or :func:`GF`."""

    characteristic: int = 0
    zero: Scalar
    one: Scalar

    def reduce(self, x: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, x: Scalar) -> Scalar:
        raise NotImplementedError

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or scalar literal (``"-3/2"``, ``"2 mod 3"``)."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.reduce(x)
        if isinstance(x, Fraction):
            return self._from_fraction(x)
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def _from_fraction(self, x: Fraction) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise FieldError(f"malformed scalar {text!r}")
        num, den, modulus = m.groups()
        if modulus is not None and int(modulus) != self.characteristic:
            raise FieldError(f"scalar {text!r} is not a residue of {self}")
        if den is not None and int(den) == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return self(Fraction(int(num), int(den) if den is not None else 1))

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    def is_finite(self) -> bool:
        return self.characteristic > 0

    def elements(self) -> tuple[Scalar, ...]:
        raise FieldError(f"{self} is infinite")

    def vectors(self, n: int) -> Iterator[tuple[Scalar, ...]]:
        """Every vector of length ``n`` (finite fields only)."""
        return product(self.elements(), repeat=n)


class Rationals(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def reduce(self, x: Scalar) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x: Scalar) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def _from_fraction(self, x: Fraction) -> Fraction:
        return x

    def format(self, x: Scalar) -> str:
        return str(Fraction(x))

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p) or p >= 2**31:
            raise FieldError(f"{p} is not a prime below 2^31")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def reduce(self, x: Scalar) -> int:
        if isinstance(x, Fraction):
            return self._from_fraction(x)
        return x % self.characteristic

    def inv(self, x: Scalar) -> int:
        x %= self.characteristic
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.characteristic)

    def _from_fraction(self, x: Fraction) -> int:
        p = self.characteristic
        if x.denominator % p == 0:
            raise FieldError(f"{x} has a denominator divisible by {p}")
        return x.numerator * pow(x.denominator, -1, p) % p

    def format(self, x: Scalar) -> str:
        return f"{x % self.characteristic} mod {self.characteristic}"

    def elements(self) -> tuple[int, ...]:
        return tuple(range(self.characteristic))

    def __repr__(self) -> str:
        return f"GF({self.characteristic})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("GF", self.characteristic))


Q = Rationals()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_spec(text: str) -> Field:
    """Parse ``"Q"``, ``"GF 3"``, ``"GF3"`` or ``"GF(3)"``."""
    t = text.strip().replace("(", " ").replace(")", " ")
    if t in ("Q", "QQ"):
        return Q
    m = re.match(r"^GF\s*(\d+)\s*$", t)
    if m:
        return GF(int(m.group(1)))
    raise FieldError(f"unknown field {text!r}")


def field_spec(field: Field) -> str:
    return "Q" if field.characteristic == 0 else f"GF {field.characteristic}"
