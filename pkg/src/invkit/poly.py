"""Dense univariate and sparse bivariate polynomials over Gaussian rationals."""

from math import comb

import numpy as np

from .errors import BothZero
from .scalar import ONE, ZERO, ExactComplex, exact, format_scalar


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable dense polynomial ``c_0 + c_1 x + ... + c_d x^d``.

    The empty coefficient tuple is the zero polynomial; otherwise the last
    coefficient is non-zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim([exact(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _trim(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls):
        return cls._raw([ZERO, ONE])

    @classmethod
    def const(cls, c):
        return cls._raw([exact(c)])

    @classmethod
    def monomial(cls, j, c=1):
        return cls._raw([ZERO] * j + [exact(c)])

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls.const(lead)
        for r in roots:
            p = p * cls._raw([-exact(r), ONE])
        return p

    # -- basic properties --------------------------------------------
    @property
    def degree(self):
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def is_real(self):
        return all(c.im == 0 for c in self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == ONE:
            return self
        return Poly._raw([c / lead for c in self.coeffs])

    def conjugate(self):
        """Polynomial with conjugated coefficients."""
        return Poly._raw([c.conjugate() for c in self.coeffs])

    def real_part(self):
        return Poly._raw([ExactComplex._raw(c.re, ZERO.im) for c in self.coeffs])

    def imag_part(self):
        return Poly._raw([ExactComplex._raw(c.im, ZERO.im) for c in self.coeffs])

    # -- arithmetic ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly._raw([])
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca.is_zero():
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            return Poly._raw(out)
        try:
            s = exact(other)
        except TypeError:
            return NotImplemented
        return Poly._raw([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ArithmeticError("polynomial division is not exact")
            return q
        s = exact(other)
        return Poly._raw([c / s for c in self.coeffs])

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc()
        if len(rem) - 1 < db:
            return Poly._raw([]), self
        quo = [ZERO] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c / lead
            quo[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - q * bc[j]
        return Poly._raw(quo), Poly._raw(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus & evaluation ----------------------------------------
    def derivative(self, k=1):
        c = self.coeffs
        for _ in range(k):
            c = [c[i] * i for i in range(1, len(c))]
        return Poly._raw(list(c))

    def __call__(self, z):
        """Exact Horner evaluation; numeric inputs are accepted via :meth:`evalf`."""
        if isinstance(z, Poly):
            return self.compose(z)
        z = exact(z)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def evalf(self, z):
        return np.polyval(self.to_numpy()[::-1], z) if self.coeffs else 0j * z

    def compose(self, q):
        """Return ``self(q(x))``."""
        acc = Poly._raw([])
        for c in reversed(self.coeffs):
            acc = acc * q + Poly._raw([c])
        return acc

    def compose_affine(self, a, b):
        """Return ``self(a*x + b)``."""
        return self.compose(Poly._raw([exact(b), exact(a)]))

    def reverse(self, degree=None):
        """``x^d * self(1/x)`` with ``d`` the degree (or the given ``degree``)."""
        d = self.degree if degree is None else degree
        c = list(self.coeffs) + [ZERO] * (d + 1 - len(self.coeffs))
        return Poly._raw(c[::-1])

    def to_numpy(self):
        """Coefficients as a complex128 array, constant term first."""
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    @classmethod
    def from_numpy(cls, coeffs, max_denominator=None):
        return cls._raw([ExactComplex.from_complex(c, max_denominator) for c in coeffs])

    # -- display -------------------------------------------------------
    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    try:
        return Poly._raw([exact(value)])
    except TypeError:
        return None


def poly_gcd(p, q):
    """Monic greatest common divisor over Q(i) by the Euclidean algorithm."""
    if not p and not q:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p.monic(), q.monic()
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd_many(polys):
    polys = [p for p in polys if p]
    if not polys:
        raise BothZero("gcd of zero polynomials is undefined")
    g = polys[0].monic()
    for p in polys[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    return g


def squarefree_decomposition(p):
    """Yun's algorithm: return ``[(s_1, 1), (s_2, 2), ...]`` with ``p = lc * prod s_i^i``.

    Only factors of positive degree are reported.
    """
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p / a
    c = dp / a
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b / g
        c = d / g
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p):
    if p.degree < 1:
        return p.monic()
    return (p / poly_gcd(p, p.derivative())).monic()


def format_poly(p, var="x"):
    if not p.coeffs:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        terms.append(_format_term(c, {var: i} if i else {}))
    return _join_terms(terms)


def _format_term(c, powers):
    mono = " ".join(v if e == 1 else f"{v}^{e}" for v, e in powers.items() if e)
    if not mono:
        return format_scalar(c)
    if c == ONE:
        return mono
    if c == -ONE:
        return "-" + mono
    if c.im == 0:
        return format_scalar(c) + " " + mono
    return "(" + format_scalar(c) + ") " + mono


def _join_terms(terms):
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


class BiPoly:
    """Sparse bivariate polynomial ``sum a_{i,j} u^i v^j`` with exact coefficients.

    ``terms`` maps exponent pairs ``(i, j)`` to non-zero ExactComplex values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in BiPoly")
            c = exact(c)
            if not c.is_zero():
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return sorted(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return BiPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, ZERO) + c1 * c2
            return BiPoly(out)
        s = exact(other)
        return BiPoly({k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BiPoly({(0, 0): ONE})
        for _ in range(k):
            result = result * self
        return result

    def degree_u(self):
        return max((i for i, _ in self.terms), default=-1)

    def as_poly_in_u(self, v):
        """Specialize ``v`` to an exact value, giving a Poly in ``u``."""
        v = exact(v)
        coeffs = [ZERO] * (self.degree_u() + 1)
        for (i, j), c in self.terms.items():
            coeffs[i] = coeffs[i] + c * v ** j
        return Poly._raw(coeffs)

    def numeric_in_u(self, v):
        """Specialize ``v`` to a float/complex, giving u-coefficients (constant first)."""
        out = np.zeros(self.degree_u() + 1, dtype=complex)
        for (i, j), c in self.terms.items():
            out[i] += complex(c) * complex(v) ** j
        return out

    def shift(self, alpha, beta):
        """Return ``B(u + alpha, v + beta)``."""
        alpha, beta = exact(alpha), exact(beta)
        out = {}
        for (i, j), c in self.terms.items():
            for a in range(i + 1):
                ca = comb(i, a) * alpha ** (i - a)
                for b in range(j + 1):
                    k = (a, b)
                    out[k] = out.get(k, ZERO) + c * ca * comb(j, b) * beta ** (j - b)
        return BiPoly(out)

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)!r})"

    def __str__(self):
        return format_bipoly(self)


def format_bipoly(b, names=("u", "v")):
    if not b.terms:
        return "0"
    keys = sorted(b.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
    terms = [_format_term(b.terms[k], {names[0]: k[0], names[1]: k[1]}) for k in keys]
    return _join_terms(terms)


def binomial_poly(n, a, b):
    """``(a + b x)^n`` as a Poly, for scalars ``a`` and ``b``."""
    a, b = exact(a), exact(b)
    return Poly._raw([comb(n, m) * a ** (n - m) * b ** m for m in range(n + 1)])
