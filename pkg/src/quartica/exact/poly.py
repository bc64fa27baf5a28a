"""Exact dense univariate and sparse bivariate polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .quadext import QuadExt
from .rational import as_rational, format_rational


def _is_zero(c) -> bool:
    return c == 0


def _scalar_json(c):
    if isinstance(c, QuadExt):
        return c.to_json()
    return format_rational(Fraction(c))


def _scalar_from_json(obj):
    if isinstance(obj, dict):
        return QuadExt.from_json(obj)
    return as_rational(obj)


class UniPoly:
    """Dense polynomial in one variable; ``coeffs[i]`` multiplies ``x**i``.

    Coefficients may be any exact ring elements (Fraction, QuadExt, BiPoly).
    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(Fraction(c) if isinstance(c, int) else c for c in cs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _lift(self, other) -> UniPoly:
        return other if isinstance(other, UniPoly) else UniPoly((other,))

    def __add__(self, other) -> UniPoly:
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def __rmul__(self, other) -> UniPoly:
        return self.scale(other)

    def scale(self, c) -> UniPoly:
        return UniPoly(c * a for a in self.coeffs)

    def __pow__(self, k: int) -> UniPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def eval(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UniPoly((other,)).coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def monic(self) -> UniPoly:
        lead = self.leading
        return UniPoly(c / lead for c in self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [_scalar_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> UniPoly:
        return cls(_scalar_from_json(c) for c in data)


Exponent = tuple[int, int]


class BiPoly:
    """Sparse polynomial in (s, t) with rational coefficients.

    ``terms`` maps (deg_s, deg_t) to a nonzero Fraction; the zero polynomial
    is the empty map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None) -> None:
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> BiPoly:
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def s(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> BiPoly:
        """Build from (coefficient, deg_s, deg_t) triples; repeats accumulate."""
        acc: dict[Exponent, Fraction] = {}
        for c, i, j in terms:
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + as_rational(c)
        return cls(acc)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> tuple[int, int]:
        """Maximum (deg_s, deg_t) over the support; (-1, -1) for zero."""
        if not self.terms:
            return (-1, -1)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def _lift(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> BiPoly:
        c = as_rational(c)
        if not c:
            return BiPoly()
        return BiPoly._raw({k: v * c for k, v in self.terms.items()})

    def __pow__(self, k: int) -> BiPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def eval(self, s, t):
        """Substitute exact scalars (or any ring elements) for s and t."""
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc = acc + c * (s**i) * (t**j)
        return acc

    __call__ = eval

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])))

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in self.items():
            mono = "*".join(
                p for p in (
                    "" if i == 0 else ("s" if i == 1 else f"s^{i}"),
                    "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
                ) if p
            )
            if not mono:
                out.append(format_rational(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append(f"-{mono}")
            else:
                out.append(f"{format_rational(c)}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict[str, str]:
        return {f"{i},{j}": format_rational(c) for (i, j), c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> BiPoly:
        terms = {}
        for key, c in data.items():
            i, j = (int(part) for part in str(key).split(","))
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in key {key!r}")
            terms[(i, j)] = terms.get((i, j), 0) + as_rational(c)
        return cls(terms)
