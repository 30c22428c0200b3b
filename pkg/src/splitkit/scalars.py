"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

A :class:`Field` fixes the backend once; scalar values themselves are plain
Python objects (``fractions.Fraction``, or ``int`` residues in ``[0, p)``),
so they are immutable, hashable and safe to share between threads.
Canonical form is unique per value: ``Fraction`` keeps lowest terms with a
positive denominator, residues are reduced mod p at every step.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import CharTwo, DivisionByZero, FieldMismatch, ParseError

Scalar = Union[Fraction, int]

#: Default prime for randomized sampling: large enough that generic loci
#: dominate random draws, small enough for fast modular arithmetic.
DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """The rationals (modulus ``None``) or F_p for an odd prime p.

    Characteristic 2 is rejected at construction: the quadratic-form
    matrices of degree-2 hypersurfaces need the scalar 1/2.
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None:
            if modulus == 2:
                raise CharTwo("characteristic 2 is not supported")
            if not _is_prime(modulus):
                raise ValueError(f"modulus {modulus} is not an odd prime")
        self.modulus = modulus

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.modulus is None

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("Field", self.modulus))

    def __repr__(self) -> str:
        if self.is_rationals:
            return "Field(rationals)"
        return f"Field(F_{self.modulus})"

    def check_same(self, other: Field) -> None:
        if self != other:
            raise FieldMismatch(f"{self} vs {other}")

    # -- element construction ------------------------------------------------

    def of(self, value) -> Scalar:
        """Coerce an int, Fraction or string to a canonical scalar."""
        if isinstance(value, str):
            return self.from_str(value)
        if self.is_rationals:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.modulus, value.denominator % self.modulus)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_rationals else 1

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_rationals:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_rationals:
            return a - b
        return (a - b) % self.modulus

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_rationals:
            return a * b
        return (a * b) % self.modulus

    def neg(self, a: Scalar) -> Scalar:
        if self.is_rationals:
            return -a
        return (-a) % self.modulus

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.is_rationals:
            return 1 / a
        return pow(a, self.modulus - 2, self.modulus)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if b == 0:
            raise DivisionByZero("division by zero")
        if self.is_rationals:
            return a / b
        return (a * pow(b, self.modulus - 2, self.modulus)) % self.modulus

    def arith(self, a: Scalar, b: Scalar, op: str) -> Scalar:
        """Dispatch one of ``add``, ``sub``, ``mul``, ``div`` by name."""
        try:
            fn = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div}[op]
        except KeyError:
            raise ValueError(f"unknown operation {op!r}") from None
        return fn(a, b)

    def rand(self, rng) -> Scalar:
        """A uniform residue for prime fields; a small random rational for tests."""
        if self.is_rationals:
            return Fraction(rng.randrange(-9, 10), rng.randrange(1, 10))
        return rng.randrange(self.modulus)

    def rand_nonzero(self, rng) -> Scalar:
        while True:
            a = self.rand(rng)
            if a != 0:
                return a

    # -- text form -----------------------------------------------------------

    def to_str(self, a: Scalar) -> str:
        return str(a)

    def from_str(self, text: str) -> Scalar:
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar literal {text!r}") from exc
        return self.of(frac)
