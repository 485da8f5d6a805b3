"""Exact arithmetic in the real quadratic field Q(sqrt(2)).

Every coefficient in the arm's kinematic equations lives in this field
(the fixed pi/4 joint offsets contribute factors of sqrt(2)), so all
downstream algebra is done over it exactly.  Elements are stored as a
pair of arbitrary-precision rationals (a, b) representing a + b*sqrt(2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction

RatLike = Union[int, Fraction]

# sqrt(2) is irrational, so a + b*sqrt(2) = 0 iff a = b = 0, and the sign of
# a nonzero element is decided by comparing a^2 against 2*b^2.


class QSqrt2:
    """An element a + b*sqrt(2) with a, b rational.  Immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a: RatLike = 0, b: RatLike = 0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> QSqrt2:
        return _ZERO

    @classmethod
    def one(cls) -> QSqrt2:
        return _ONE

    @classmethod
    def sqrt2(cls) -> QSqrt2:
        return _SQRT2

    @classmethod
    def from_rational(cls, x: RatLike) -> QSqrt2:
        return cls(x, 0)

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> QSqrt2:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> QSqrt2:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> QSqrt2:
        return (-self) + other

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self.a, -self.b)

    def __mul__(self, other) -> QSqrt2:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> QSqrt2:
        """(a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2*b^2)."""
        norm = self.a * self.a - 2 * self.b * self.b
        if not norm:
            raise ZeroDivisionError("inversion of zero in Q(sqrt2)")
        return QSqrt2(self.a / norm, -self.b / norm)

    def __truediv__(self, other) -> QSqrt2:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QSqrt2:
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QSqrt2:
        if n < 0:
            return self.inverse() ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(2): -1, 0, or +1."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against 2 b^2 (never equal: sqrt2 odd)
        d = a * a - 2 * b * b
        if a > 0:  # b < 0
            return 1 if d > 0 else -1
        return -1 if d > 0 else 1

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    def __abs__(self) -> QSqrt2:
        return -self if self.sign() < 0 else self

    # -- conversion --------------------------------------------------------

    def conjugate(self) -> QSqrt2:
        """Galois conjugate a - b*sqrt(2)."""
        return QSqrt2(self.a, -self.b)

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT2_FLOAT

    def bounds(self) -> tuple[Fraction, Fraction]:
        """A tight rational enclosure [lo, hi] of the real value."""
        if self.b >= 0:
            return self.a + self.b * SQRT2_LO, self.a + self.b * SQRT2_HI
        return self.a + self.b * SQRT2_HI, self.a + self.b * SQRT2_LO

    def __repr__(self) -> str:
        return f"QSqrt2({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        from .poly import format_coeff

        return format_coeff(self)


def _coerce(x) -> QSqrt2:
    if isinstance(x, QSqrt2):
        return x
    if isinstance(x, (int, Fraction)):
        return QSqrt2(x, 0)
    return NotImplemented


_ZERO = QSqrt2(0, 0)
_ONE = QSqrt2(1, 0)
_SQRT2 = QSqrt2(0, 1)
_SQRT2_FLOAT = 2 ** 0.5

# 40-digit rational enclosure of sqrt(2), used for interval evaluation.
_SCALE = 10 ** 40
_ISQRT = __import__("math").isqrt(2 * _SCALE * _SCALE)
SQRT2_LO = Fraction(_ISQRT, _SCALE)
SQRT2_HI = Fraction(_ISQRT + 1, _SCALE)
