"""Exact coefficient fields: the rationals and prime fields GF(p).

Module data (representation matrices) is stored as Python ints or
``Fraction`` values; a field coerces those into its own element type
before doing arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class RationalField:
    name = "rational"
    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def to_rational(self, x) -> Fraction:
        return Fraction(x)


class PrimeField:
    characteristic: int

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = "gfp"
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __call__(self, x) -> int:
        p = self.characteristic
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        x %= self.characteristic
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.characteristic)

    def to_rational(self, x) -> Fraction:
        # symmetric lift, adequate for the small entries produced here
        p = self.characteristic
        x %= p
        return Fraction(x - p if x > p // 2 else x)


QQ = RationalField()


def make_field(name: str = "rational", prime: int = DEFAULT_PRIME):
    if name in ("rational", "QQ", "q"):
        return QQ
    if name in ("gfp", "GF", "prime"):
        return PrimeField(prime)
    raise ValueError(f"unknown field {name!r}")
