"""
Exact scalar arithmetic: rationals, Gaussian rationals a + b·i and a single
quadratic extension u + v·√d on top of them.

All values are immutable and kept in canonical form, so equality is a
structural comparison.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Tuple, Union

from sympy import factorint

from src.errors import NonPositive, ParseError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rat(value) -> Fraction:
    """Coerce int / Fraction / 'a/b' text to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, GaussRat):
        if value.im:
            raise ValueError(f"{value} is not real")
        return value.re
    return Fraction(value)


class GaussRat:
    """Gaussian rational re + im·i with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussRat":
        obj = cls.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussRat._make(self.re * o.re, _ZERO)
        return GaussRat._make(self.re * o.re - self.im * o.im,
                              self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("inverse of zero")
            return GaussRat._make(1 / self.re, _ZERO)
        norm = self.re * self.re + self.im * self.im
        return GaussRat._make(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussRat._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussRat._make(_ONE, _ZERO)
        for _ in range(exponent):
            result = result * self
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # structure

    def conj(self) -> "GaussRat":
        return GaussRat._make(self.re, -self.im)

    def real(self) -> "GaussRat":
        return GaussRat._make(self.re, _ZERO)

    def imag(self) -> "GaussRat":
        return GaussRat._make(self.im, _ZERO)

    @property
    def is_real(self) -> bool:
        return not self.im

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussRat({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussRat._make(_ZERO, _ZERO)
ONE = GaussRat._make(_ONE, _ZERO)
I = GaussRat._make(_ZERO, _ONE)


def _coerce(value):
    if isinstance(value, GaussRat):
        return value
    if isinstance(value, Fraction):
        return GaussRat._make(value, _ZERO)
    if isinstance(value, int):
        return GaussRat._make(Fraction(value), _ZERO)
    return None


def as_gauss(value) -> GaussRat:
    """Coerce a number (or a QuadExt without √d part) to a GaussRat."""
    if isinstance(value, QuadExt):
        if value.v:
            raise ValueError(f"{value} has an irrational part")
        return value.u
    coerced = _coerce(value)
    if coerced is None:
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return coerced


def is_positive_complex(z) -> bool:
    """re(z) > 0, or re(z) = 0 and im(z) > 0."""
    z = as_gauss(z)
    return z.re > 0 or (z.re == 0 and z.im > 0)


def conj(z):
    """Complex conjugate; reals are fixed."""
    if isinstance(z, (GaussRat, QuadExt)):
        return z.conj()
    return as_gauss(z)


# square roots


def squarefree_part(n: int) -> Tuple[int, int]:
    """Write n = f·s² with f square-free; returns (f, s)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    free, square = 1, 1
    for prime, exponent in factorint(abs(n)).items():
        prime, exponent = int(prime), int(exponent)
        if exponent % 2:
            free *= prime
        square *= prime ** (exponent // 2)
    return sign * free, square


@dataclass(frozen=True)
class ExtensionNeeded:
    """√r = coeff·√disc with disc a square-free integer other than 1."""
    disc: int
    coeff: Fraction

    def value(self) -> "QuadExt":
        return QuadExt(ZERO, GaussRat(self.coeff), self.disc)


def sqrt_exact(r) -> Union[Fraction, ExtensionNeeded]:
    """Exact square root of a positive rational, or the extension it needs."""
    r = as_rat(r)
    if r <= 0:
        raise NonPositive(f"square root of non-positive {r}")
    num, den = r.numerator, r.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    free, square = squarefree_part(num * den)
    return ExtensionNeeded(disc=free, coeff=Fraction(square, den))


class QuadExt:
    """u + v·√disc with Gaussian-rational u, v and square-free integer disc."""

    __slots__ = ("u", "v", "disc")

    def __init__(self, u, v, disc):
        disc = as_rat(disc)
        if not disc:
            raise ValueError("disc must be nonzero")
        free, square = squarefree_part(disc.numerator * disc.denominator)
        if free in (1, -1):
            raise ValueError(f"disc {disc} does not need an extension")
        self.u = as_gauss(u)
        # √(p/q) = (s/q)·√f
        self.v = as_gauss(v) * Fraction(square, disc.denominator)
        self.disc = free

    @classmethod
    def _make(cls, u: GaussRat, v: GaussRat, disc: int) -> "QuadExt":
        obj = cls.__new__(cls)
        obj.u = u
        obj.v = v
        obj.disc = disc
        return obj

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.disc == self.disc:
                return other
            if not other.v:
                return QuadExt._make(other.u, ZERO, self.disc)
            if not self.v:
                return None
            raise ValueError("only one quadratic extension can be active at a time")
        coerced = _coerce(other)
        if coerced is None:
            return None
        return QuadExt._make(coerced, ZERO, self.disc)

    def __add__(self, other):
        if isinstance(other, QuadExt) and other.disc != self.disc and not self.v and other.v:
            return other + self.u
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt._make(self.u + o.u, self.v + o.v, self.disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._make(-self.u, -self.v, self.disc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadExt) and other.disc != self.disc and not self.v and other.v:
            return other * self.u
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt._make(self.u * o.u + self.v * o.v * self.disc,
                             self.u * o.v + self.v * o.u, self.disc)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.u * self.u - self.v * self.v * self.disc
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        inv = norm.inverse()
        return QuadExt._make(self.u * inv, -self.v * inv, self.disc)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.disc == self.disc:
                return self.u == other.u and self.v == other.v
            return not self.v and not other.v and self.u == other.u
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return not self.v and self.u == coerced

    def __hash__(self):
        if not self.v:
            return hash(self.u)
        return hash((self.u, self.v, self.disc))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def conj(self) -> "QuadExt":
        # √disc is real for disc > 0 and purely imaginary otherwise
        v = self.v.conj() if self.disc > 0 else -self.v.conj()
        return QuadExt._make(self.u.conj(), v, self.disc)

    def real(self) -> "QuadExt":
        return (self + self.conj()) * Fraction(1, 2)

    def imag(self) -> "QuadExt":
        return (self - self.conj()) * GaussRat._make(_ZERO, Fraction(-1, 2))

    @property
    def is_real(self) -> bool:
        return self == self.conj()

    def __repr__(self):
        return f"QuadExt({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


def reduce_scalar(x):
    """Drop a vanishing √d part so results stay Gaussian rationals when possible."""
    if isinstance(x, QuadExt) and not x.v:
        return x.u
    return x


# text form

_RAT = r"\d+(?:/\d+)?"
_RE_RATIONAL = re.compile(rf"^[+-]?{_RAT}$")
_RE_IMAG = re.compile(rf"^([+-]?)({_RAT})?\*?i$")
_RE_COMPLEX = re.compile(rf"^([+-]?{_RAT})([+-])({_RAT})?\*?i$")
_RE_QUAD = re.compile(r"^\((.+)\)\+\((.+)\)\*sqrt\((-?\d+)\)$")


def _format_rat(value: Fraction) -> str:
    return str(value)


def format_scalar(x) -> str:
    """Render as 'a/b', 'a/b+c/di' or '(u)+(v)*sqrt(d)'."""
    if isinstance(x, QuadExt):
        if not x.v:
            return format_scalar(x.u)
        return f"({format_scalar(x.u)})+({format_scalar(x.v)})*sqrt({x.disc})"
    z = as_gauss(x)
    if not z.im:
        return _format_rat(z.re)
    sign = "-" if z.im < 0 else "+"
    return f"{_format_rat(z.re)}{sign}{_format_rat(abs(z.im))}i"


def parse_scalar(text: str):
    """Inverse of format_scalar; also accepts 'i', '-i', '3/2i'."""
    if not isinstance(text, str):
        if isinstance(text, (int, Fraction, GaussRat, QuadExt)):
            return text if isinstance(text, (GaussRat, QuadExt)) else as_gauss(text)
        raise ParseError(f"Cannot parse scalar from {text!r}")
    s = text.replace(" ", "")
    try:
        if _RE_RATIONAL.match(s):
            return GaussRat(Fraction(s))
        m = _RE_IMAG.match(s)
        if m:
            magnitude = Fraction(m.group(2)) if m.group(2) else _ONE
            return GaussRat(0, -magnitude if m.group(1) == "-" else magnitude)
        m = _RE_COMPLEX.match(s)
        if m:
            magnitude = Fraction(m.group(3)) if m.group(3) else _ONE
            return GaussRat(Fraction(m.group(1)), -magnitude if m.group(2) == "-" else magnitude)
        m = _RE_QUAD.match(s)
        if m:
            u = parse_scalar(m.group(1))
            v = parse_scalar(m.group(2))
            return reduce_scalar(QuadExt(u, v, int(m.group(3))))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"Malformed scalar {text!r}: {e}") from e
    raise ParseError(f"Malformed scalar {text!r}")


if __name__ == "__main__":
    # Quick smoke test
    z = parse_scalar("1/2-3i")
    print(f"z = {z}, conj = {conj(z)}, z*conj(z) = {z * conj(z)}")
    print(f"sqrt(4/9) = {sqrt_exact(Fraction(4, 9))}")
    print(f"sqrt(2)   = {sqrt_exact(2)}")
    root2 = sqrt_exact(2).value()
    print(f"(sqrt 2)^2 = {root2 * root2}")
