"""Exact scalar arithmetic: the rationals and prime fields F_p.

Scalars are plain Python values (``fractions.Fraction`` for Q, canonical
``int`` residues 0..p-1 for F_p); a ``Field`` instance supplies the
operations so that all matrix code is field-agnostic.  Rationals are kept
normalized by ``Fraction`` itself (reduced, positive denominator), which
makes equality canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, SingularError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A field given by its characteristic: 0 for Q, a prime p for F_p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise DomainError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    # scalar construction

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1 % self.characteristic

    def of(self, value):
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.characteristic == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise DomainError(f"denominator not invertible mod {self.characteristic}")
            return (value.numerator * pow(value.denominator, -1, self.characteristic)) % self.characteristic
        return int(value) % self.characteristic

    # arithmetic

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if not a:
            raise SingularError("division by zero")
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # serialization: "a/b" or "a" over Q, canonical residues over F_p

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        text = text.strip()
        try:
            if self.characteristic == 0:
                return Fraction(text)
            if "/" in text:
                num, den = text.split("/")
                return self.of(Fraction(int(num), int(den)))
            value = int(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad scalar {text!r}: {exc}") from None
        if not 0 <= value < self.characteristic:
            raise DomainError(
                f"scalar {text!r} is not a canonical residue mod {self.characteristic}"
            )
        return value


QQ = Field(0)


def prime_field(p: int) -> Field:
    return Field(p)
