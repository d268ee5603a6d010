"""Exact Gaussian-rational scalars and small combinatorial helpers."""

from fractions import Fraction
from numbers import Rational


class ExactComplex:
    """A complex number ``re + im*i`` with arbitrary-precision rational parts.

    Instances are immutable and hashable. Arithmetic with ints, Fractions and
    other ``ExactComplex`` values stays exact. Floats are accepted but are
    taken at their exact binary value.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def from_complex(cls, z, max_denominator=None):
        """Convert a float/complex exactly (or approximately with ``max_denominator``)."""
        z = complex(z)
        re, im = Fraction(z.real), Fraction(z.imag)
        if max_denominator is not None:
            re = re.limit_denominator(max_denominator)
            im = im.limit_denominator(max_denominator)
        return cls._raw(re, im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return ExactComplex._raw(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = exact(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return ExactComplex._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = exact(other)
        except TypeError:
            return NotImplemented
        return ExactComplex._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = exact(other)
        except TypeError:
            return NotImplemented
        return ExactComplex._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return exact(other) - self

    def __mul__(self, other):
        try:
            other = exact(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return ExactComplex._raw(a * c, b)
        return ExactComplex._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = exact(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by exact zero")
        if other.im == 0:
            return ExactComplex._raw(self.re / other.re, self.im / other.re)
        den = other.abs2()
        c, d = other.re, other.im
        return ExactComplex._raw((self.re * c + self.im * d) / den,
                                 (self.im * c - self.re * d) / den)

    def __rtruediv__(self, other):
        return exact(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactComplex(1) / (self ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"ExactComplex({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def exact(value):
    """Coerce ints, Fractions, strings and ExactComplex to ExactComplex.

    Floats and complex floats are converted exactly from their binary value.
    """
    if isinstance(value, ExactComplex):
        return value
    if isinstance(value, (int, Rational)):
        return ExactComplex._raw(Fraction(value), Fraction(0))
    if isinstance(value, float):
        return ExactComplex._raw(Fraction(value), Fraction(0))
    if isinstance(value, complex):
        return ExactComplex.from_complex(value)
    if isinstance(value, str):
        from .parsing import parse_scalar
        return parse_scalar(value)
    raise TypeError(f"cannot convert {type(value).__name__} to ExactComplex")


ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)


def _format_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(z):
    """Render ``z`` in the literal syntax accepted by the parser (e.g. ``3/4+1/2i``)."""
    z = exact(z)
    if z.im == 0:
        return _format_fraction(z.re)
    im = _format_fraction(abs(z.im)) + "i"
    if abs(z.im) == 1:
        im = "i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im
    return _format_fraction(z.re) + ("-" if z.im < 0 else "+") + im


def falling_factorial(n, j):
    """Return ``n (n-1) ... (n-j+1)``; the empty product (``j == 0``) is 1.

    ``n`` may be any number type (int, Fraction, float, ExactComplex); the
    product is formed in that type.

    >>> falling_factorial(5, 3)
    60
    >>> falling_factorial(3.5, 2)
    8.75
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    out = 1
    for m in range(j):
        out = out * (n - m)
    return out
