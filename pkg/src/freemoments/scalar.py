"""Exact Gaussian-rational scalars.

Every coefficient and every moment in this package is a ``Scalar``: a complex
number ``re + im*i`` whose real and imaginary parts are arbitrary-precision
rationals (``fractions.Fraction``).  All arithmetic is exact, so results can
be compared with ``==`` instead of tolerances.  Floating-point values are
rejected everywhere.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

_RationalLike = "int | Fraction | str"


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "floating-point values are not allowed; use int, Fraction or a "
            "string like '3/2'"
        )
    return Fraction(value)


class Scalar:
    """An exact Gaussian rational ``re + im*i``.

    Immutable.  ``re`` and ``im`` are ``Fraction`` instances, which keeps the
    usual normal-form invariants (reduced fractions, positive denominators)
    without extra bookkeeping.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- normal-form accessors matching the documented invariants ----------

    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def is_real(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return NotImplemented

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Scalar exponent must be a nonnegative integer")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- encoding -------------------------------------------------------------

    def __str__(self) -> str:
        """Exact fraction string: ``a/b``, or ``a/b+c/d*i`` when im != 0."""
        if self.im == 0:
            return str(self.re)
        imag = f"{abs(self.im)}*i" if abs(self.im) != 1 else "i"
        sign = "-" if self.im < 0 else "+"
        if self.re == 0:
            return f"-{imag}" if self.im < 0 else imag
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    _STRING_RE = _re.compile(
        r"^(?P<re>[+-]?\d+(?:/\d+)?)?"
        r"(?P<im>(?:(?<=\d)[+-]|[+-]?)(?:\d+(?:/\d+)?\*)?i)?$"
    )

    @classmethod
    def from_string(cls, text: str) -> "Scalar":
        """Parse the output of ``str()`` back into an equal Scalar."""
        s = text.strip().replace(" ", "")
        match = cls._STRING_RE.match(s)
        if not match or (match.group("re") is None and match.group("im") is None):
            raise ValueError(f"not a valid Scalar string: {text!r}")
        re_part = match.group("re") or "0"
        im_text = match.group("im")
        if im_text is None:
            im_part = Fraction(0)
        else:
            body = im_text[:-1]  # strip trailing 'i'
            sign = 1
            if body.startswith("+"):
                body = body[1:]
            elif body.startswith("-"):
                sign = -1
                body = body[1:]
            body = body.rstrip("*")
            im_part = sign * (Fraction(body) if body else Fraction(1))
        return cls(Fraction(re_part), im_part)

    def to_float(self) -> complex:
        """Lossy decimal approximation, for display only."""
        if self.im == 0:
            return float(self.re)
        return complex(float(self.re), float(self.im))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
