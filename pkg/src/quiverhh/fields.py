"""Exact coefficient fields: the rationals and prime fields.

Scalars are plain values (``Fraction`` for the rationals, ``int`` in
``[0, p)`` for a prime field); a :class:`FieldSpec` bundles the operations
so linear algebra can be written once for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (``char == 0``) or the prime field of ``char`` elements."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.char}")

    # -- construction ------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def of_int(self, n: int):
        return n % self.char if self.char else Fraction(n)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(a, self.char - 2, self.char)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    # ``char | n`` test used by the loop-power characteristic condition.
    def divides_char(self, n: int) -> bool:
        return self.char != 0 and n % self.char == 0

    def scalar_str(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.char == 0 else f"F{self.char}"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
