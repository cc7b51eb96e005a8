"""Constructors for the named value forms: integers and dyadic rationals.

An integer n > 0 is the chain {n-1 | } built down to 0; a negative integer is
the conjugate chain.  The unit dyadic 1/2^k is {0 | 1/2^(k-1)} with 1/2^0 = 1,
and a general dyadic n/2^k is the integer part plus the disjunctive sum of the
remaining unit fractions.  The sum-of-units construction is deliberate: the
"simplicity" identities relating m/2^k to {(m-1)/2^k | (m+1)/2^k} are then
real claims the algebra layer has to certify, not definitions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Arena, GameId

MAX_INTEGER = 999
MAX_EXPONENT = 64


class BoundError(ValueError):
    """A literal exceeds the configured integer/exponent bounds."""


@dataclass(frozen=True, order=True)
class DyadicValue:
    """A dyadic rational numerator / 2**exponent in canonical form."""

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        if self.exponent > 0 and self.numerator % 2 == 0:
            raise ValueError(f"{self.numerator}/2^{self.exponent} is not canonical")

    @staticmethod
    def make(numerator: int, exponent: int = 0) -> "DyadicValue":
        """Canonicalize numerator / 2**exponent (numerator odd or exponent 0)."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        while exponent > 0 and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        return DyadicValue(numerator, exponent)

    @property
    def is_integer(self) -> bool:
        return self.exponent == 0

    def __neg__(self) -> "DyadicValue":
        return DyadicValue(-self.numerator, self.exponent)

    def as_float(self) -> float:
        return self.numerator / (1 << self.exponent)

    def midpoint(self, other: "DyadicValue") -> "DyadicValue":
        k = max(self.exponent, other.exponent) + 1
        a = self.numerator << (k - self.exponent)
        b = other.numerator << (k - other.exponent)
        if (a + b) % 2:
            raise ValueError("midpoint is not dyadic at this exponent")
        return DyadicValue.make((a + b) // 2, k)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        if self.exponent <= 10:
            return f"{self.numerator}/{1 << self.exponent}"
        return f"{self.numerator}/2^{self.exponent}"


def integer_form(arena: Arena, n: int, *, max_integer: int = MAX_INTEGER) -> GameId:
    """The integer game form: 0 is {|}, n > 0 is {n-1|}, n < 0 the conjugate."""
    if abs(n) > max_integer:
        raise BoundError(f"integer {n} exceeds bound {max_integer}")
    if n < 0:
        return arena.conjugate(integer_form(arena, -n, max_integer=max_integer))
    g = arena.zero
    for k in range(1, n + 1):
        g = arena.intern((g,), ())
        arena.register_name(g, str(k))
        arena.register_name(arena.conjugate(g), str(-k))
    return g


def unit_dyadic_form(arena: Arena, exponent: int, *,
                     max_exponent: int = MAX_EXPONENT) -> GameId:
    """The unit fraction form 1/2^exponent (exponent 0 gives the integer 1)."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if exponent > max_exponent:
        raise BoundError(f"exponent {exponent} exceeds bound {max_exponent}")
    g = integer_form(arena, 1)
    for k in range(1, exponent + 1):
        g = arena.intern((arena.zero,), (g,))
        arena.register_name(g, str(DyadicValue(1, k)))
        arena.register_name(arena.conjugate(g), str(DyadicValue(-1, k)))
    return g


def dyadic_form(arena: Arena, value: DyadicValue, *,
                max_integer: int = MAX_INTEGER,
                max_exponent: int = MAX_EXPONENT) -> GameId:
    """The game form of a canonical dyadic: integer part plus unit-fraction copies."""
    if value.numerator < 0:
        pos = dyadic_form(arena, -value, max_integer=max_integer,
                          max_exponent=max_exponent)
        return arena.conjugate(pos)
    if value.is_integer:
        return integer_form(arena, value.numerator, max_integer=max_integer)
    whole, frac = divmod(value.numerator, 1 << value.exponent)
    if whole > max_integer:
        raise BoundError(f"integer part {whole} exceeds bound {max_integer}")
    unit = unit_dyadic_form(arena, value.exponent, max_exponent=max_exponent)
    g = integer_form(arena, whole, max_integer=max_integer)
    for _ in range(frac):
        g = arena.sum(g, unit)
    arena.register_name(g, str(value))
    arena.register_name(arena.conjugate(g), str(-value))
    return g
