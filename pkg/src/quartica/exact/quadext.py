"""Elements a + b*sqrt(d) of a quadratic extension of Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from ..errors import FieldMismatchError
from .rational import as_rational, format_rational, rat_is_square

Scalar = Union[int, Fraction, "QuadExt"]


class QuadExt:
    """Immutable element ``re + im*sqrt(d)``.

    ``d`` is a non-square rational and is compared literally: two elements
    live in the same field only when their ``d`` values are equal.  Plain
    ints and Fractions mix freely with any field.
    """

    __slots__ = ("re", "im", "d")

    def __init__(self, re: Union[int, Fraction, str], im: Union[int, Fraction, str], d: Union[int, Fraction, str]) -> None:
        d = as_rational(d)
        if rat_is_square(d) is not None:
            raise ValueError(f"d={d} is a rational square; the extension would be trivial")
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def _make(cls, re: Fraction, im: Fraction, d: Fraction) -> QuadExt:
        # trusted constructor: d already validated
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        object.__setattr__(obj, "d", d)
        return obj

    def __reduce__(self):
        return (_rebuild, (self.re, self.im, self.d))

    @classmethod
    def sqrt(cls, d: Union[int, Fraction, str]) -> QuadExt:
        """The generator sqrt(d) itself."""
        return cls(0, 1, d)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> QuadExt:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt._make(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._make(self.re + o.re, self.im + o.im, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt._make(-self.re, -self.im, self.d)

    def __pos__(self) -> QuadExt:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._make(self.re - o.re, self.im - o.im, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt._make(self.re * other, self.im * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._make(
            self.re * o.re + self.d * self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadExt:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = QuadExt._make(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> QuadExt:
        return QuadExt._make(self.re, -self.im, self.d)

    def norm(self) -> Fraction:
        """e * conj(e), always rational."""
        return self.re * self.re - self.d * self.im * self.im

    def inv(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExt._make(self.re / n, -self.im / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt._make(self.re / other, self.im / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    # -- comparisons ------------------------------------------------------

    def is_rational(self) -> bool:
        return self.im == 0

    def to_rational(self) -> Fraction:
        if self.im != 0:
            raise ValueError(f"{self} is not rational")
        return self.re

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if self.im == 0 and other.im == 0:
                return self.re == other.re
            return self.d == other.d and self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im, self.d))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"QuadExt({format_rational(self.re)!r}, {format_rational(self.im)!r}, d={format_rational(self.d)!r})"

    def __str__(self) -> str:
        unit = "i" if self.d == -1 else f"sqrt({format_rational(self.d)})"
        if self.im == 0:
            return format_rational(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)} {sign} {format_rational(abs(self.im))}*{unit}"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im), "d": format_rational(self.d)}

    @classmethod
    def from_json(cls, obj: dict) -> QuadExt:
        return cls(obj["re"], obj["im"], obj["d"])


def _rebuild(re: Fraction, im: Fraction, d: Fraction) -> QuadExt:
    return QuadExt._make(re, im, d)


def conj(x):
    """Conjugate; the identity on rationals."""
    return x.conj() if isinstance(x, QuadExt) else x


def is_rational_scalar(x) -> bool:
    return not isinstance(x, QuadExt) or x.im == 0


def to_rational(x) -> Fraction:
    if isinstance(x, QuadExt):
        return x.to_rational()
    return Fraction(x)
