"""Linear differential operators with polynomial coefficients.

An operator ``T = sum_j Q_j(x) D^j`` is stored as its coefficient list
``Q_0, ..., Q_k``. Everything here is computed exactly unless the function
name or docstring says otherwise.
"""

from dataclasses import dataclass
from math import comb

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import (EigenvalueCollision, IndexOutOfRange, NotExactlySolvable,
                     ZeroScale)
from .parsing import parse_operator, parse_poly
from .poly import BiPoly, Poly, binomial_poly, format_poly
from .scalar import ONE, ZERO, exact, falling_factorial


class DiffOp:
    """Immutable operator ``sum_j Q_j(x) D^j`` with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        polys = [c if isinstance(c, Poly) else _to_poly(c) for c in coeffs]
        while polys and not polys[-1]:
            polys.pop()
        if not polys:
            raise ValueError("the zero operator is not a DiffOp")
        object.__setattr__(self, "coeffs", tuple(polys))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def parse(cls, text):
        return cls(parse_operator(text))

    @classmethod
    def from_json(cls, items):
        return cls([parse_poly(s) for s in items])

    def to_json(self):
        return [format_poly(q) for q in self.coeffs]

    def __str__(self):
        terms = []
        for j in range(self.order, -1, -1):
            q = self.coeffs[j]
            if not q:
                continue
            body = format_poly(q)
            if j == 0:
                terms.append(f"({body})")
            else:
                terms.append(f"({body}) D{j}")
        return " + ".join(terms)

    def __repr__(self):
        return f"DiffOp({str(self)!r})"

    def __eq__(self, other):
        return isinstance(other, DiffOp) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coeff(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Poly()

    @property
    def leading(self):
        return self.coeffs[-1]

    # -- action -----------------------------------------------------------
    def apply(self, p):
        out = Poly()
        dp = p
        for q in self.coeffs:
            if not dp:
                break
            if q:
                out = out + q * dp
            dp = dp.derivative()
        return out

    __call__ = apply

    def image_of_monomial(self, m):
        """``T(x^m)`` computed directly from falling factorials."""
        out = Poly()
        for j, q in enumerate(self.coeffs):
            if j > m or not q:
                continue
            out = out + q * Poly.monomial(m - j, falling_factorial(m, j))
        return out

    def fuchs_index(self):
        return max(q.degree - j for j, q in enumerate(self.coeffs) if q)

    def nth_fuchs_index(self, n):
        """``max_{j<=n} (deg T(x^j) - j)``; None when T kills every ``x^j``, j <= n."""
        best = None
        for j in range(n + 1):
            img = self.image_of_monomial(j)
            if img:
                v = img.degree - j
                best = v if best is None else max(best, v)
        return best

    def classify_basic(self):
        rho = self.fuchs_index()
        return BasicClass(self.leading.degree - self.order == rho, rho == 0)

    def is_nondegenerate(self):
        return self.classify_basic().nondegenerate

    def is_exactly_solvable(self):
        return self.fuchs_index() == 0

    def matrix(self, n):
        """Columns ``T(x^m)`` for ``m = 0..n`` as Poly values."""
        return [self.image_of_monomial(m) for m in range(n + 1)]


@dataclass(frozen=True)
class BasicClass:
    nondegenerate: bool
    exactly_solvable: bool


def _to_poly(value):
    if isinstance(value, str):
        return parse_poly(value)
    if isinstance(value, (list, tuple)):
        return Poly(value)
    return Poly.const(value)


def as_diffop(value):
    if isinstance(value, DiffOp):
        return value
    if isinstance(value, str):
        return DiffOp.parse(value)
    return DiffOp(value)


# ---------------------------------------------------------------------------
# symbols

def symbol_one_plus_xy(T, n):
    """``T[(1+xy)^n]`` as a BiPoly in ``(x, y)``."""
    T = as_diffop(T)
    out = {}
    for j, q in enumerate(T.coeffs):
        if j > n or not q:
            continue
        ff = falling_factorial(n, j)
        for a, ca in enumerate(q.coeffs):
            if ca.is_zero():
                continue
            # Q_j(x) y^j (1+xy)^(n-j)
            for m in range(n - j + 1):
                key = (a + m, j + m)
                out[key] = out.get(key, ZERO) + ca * (ff * comb(n - j, m))
    return BiPoly(out)


def symbol_x_minus_y(T, n):
    """``T((x-y)^n) = sum_j (n)_j Q_j(x) (x-y)^(n-j)`` as a BiPoly in ``(x, y)``."""
    T = as_diffop(T)
    out = {}
    for j, q in enumerate(T.coeffs):
        if j > n or not q:
            continue
        ff = falling_factorial(n, j)
        for a, ca in enumerate(q.coeffs):
            if ca.is_zero():
                continue
            for m in range(n - j + 1):
                key = (a + m, n - j - m)
                c = ca * (ff * comb(n - j, m) * (-1) ** (n - j - m))
                out[key] = out.get(key, ZERO) + c
    return BiPoly(out)


def _a(T, ell, j):
    """Coefficient of ``x^(j+ell)`` in ``Q_j``."""
    e = j + ell
    return T.coeff(j).coeff(e) if e >= 0 else ZERO


def _check_ell(T, n, ell):
    rho_n = T.nth_fuchs_index(n)
    if rho_n is None or not (-n <= ell <= rho_n):
        raise IndexOutOfRange(f"ell = {ell} outside [-{n}, {rho_n}]")


def P_ell(T, n, ell, check=True):
    """``sum_j j! a_{ell,j} C(n,j) x^j (1+x)^(n-j)``."""
    T = as_diffop(T)
    if check:
        _check_ell(T, n, ell)
    out = Poly()
    for j in range(min(T.order, n) + 1):
        a = _a(T, ell, j)
        if a:
            out = out + Poly.monomial(j, a * falling_factorial(n, j)) * binomial_poly(n - j, 1, 1)
    return out


def f_ell(T, n, ell, check=True):
    """``sum_j j! a_{ell,j} C(n,j) x^j``."""
    T = as_diffop(T)
    if check:
        _check_ell(T, n, ell)
    return Poly([_a(T, ell, j) * falling_factorial(n, j) for j in range(min(T.order, n) + 1)])


# ---------------------------------------------------------------------------
# spectrum and eigenpolynomials

@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple

    def __getitem__(self, j):
        return self.eigenvalues[j]

    def __len__(self):
        return len(self.eigenvalues)


def _require_exactly_solvable(T):
    if T.fuchs_index() != 0:
        raise NotExactlySolvable(f"Fuchs index is {T.fuchs_index()}, not 0")


def eigenvalue(T, j):
    """Coefficient of ``x^j`` in ``T(x^j)``."""
    return sum((_a(T, 0, i) * falling_factorial(j, i) for i in range(min(T.order, j) + 1)), ZERO)


def spectrum(T, N):
    T = as_diffop(T)
    _require_exactly_solvable(T)
    return Spectrum(tuple(eigenvalue(T, j) for j in range(N + 1)))


def eigenpolynomial(T, n):
    """Monic degree-``n`` solution of ``T(p) = lambda_n p`` by back-substitution."""
    T = as_diffop(T)
    _require_exactly_solvable(T)
    lam = spectrum(T, n).eigenvalues
    for j in range(n):
        if lam[j] == lam[n]:
            raise EigenvalueCollision(j, f"lambda_{j} = lambda_{n} = {lam[n]}")
    cols = T.matrix(n)
    c = [ZERO] * n + [ONE]
    for i in range(n - 1, -1, -1):
        acc = ZERO
        for m in range(i + 1, n + 1):
            if c[m]:
                acc = acc + cols[m].coeff(i) * c[m]
        c[i] = -acc / (lam[i] - lam[n])
    return Poly(c)


def operator_matrix(T, n):
    """Complex ``(n+1) x (n+1)`` matrix of T on the monomial basis (numeric)."""
    T = as_diffop(T)
    M = np.zeros((n + 1, n + 1), dtype=complex)
    for m, img in enumerate(T.matrix(n)):
        if img.degree > n:
            raise NotExactlySolvable("T raises degrees; no finite matrix on degree <= n")
        M[: img.degree + 1, m] = img.to_numpy()
    return M


def power_iteration(T, q, steps):
    """Iterate ``q -> T(q)`` numerically, rescaling to monic after each step."""
    T = as_diffop(T)
    q = q.to_numpy() if isinstance(q, Poly) else np.asarray(q, dtype=complex)
    m = len(q) - 1
    M = operator_matrix(T, m)
    v = q / q[-1]
    for _ in range(steps):
        v = M @ v
        v = v / v[-1]
    return v


# ---------------------------------------------------------------------------
# psi and phi

def psi_exact(T, t, n):
    """``sum_j (n)_j Q_j(x) (x-t)^(k-j)`` with exact ``t`` and ``n``."""
    T = as_diffop(T)
    k = T.order
    t = exact(t)
    n = exact(n)
    out = Poly()
    for j, q in enumerate(T.coeffs):
        if q:
            out = out + q * binomial_poly(k - j, -t, 1) * falling_factorial(n, j)
    return out


class PsiTable:
    """Precomputed numeric tensor for fast evaluation of ``psi(., t, n)``.

    ``table[j, a, b]`` is the coefficient of ``x^a t^b`` in ``Q_j(x)(x-t)^(k-j)``.
    """

    def __init__(self, T):
        T = as_diffop(T)
        self.op = T
        k = T.order
        self.order = k
        deg = max(q.degree + k - j for j, q in enumerate(T.coeffs) if q)
        tab = np.zeros((k + 1, deg + 1, k + 1), dtype=complex)
        for j, q in enumerate(T.coeffs):
            if not q:
                continue
            qc = q.to_numpy()
            for b in range(k - j + 1):
                # (x - t)^(k-j) contributes C(k-j, b) (-t)^b x^(k-j-b)
                coef = comb(k - j, b) * (-1) ** b
                tab[j, k - j - b: k - j - b + len(qc), b] += coef * qc
        self.table = tab

    def falling(self, n):
        return np.array([falling_factorial(float(n), j) for j in range(self.order + 1)])

    def coeffs(self, t, n):
        tp = complex(t) ** np.arange(self.order + 1)
        c = np.einsum("j,jab,b->a", self.falling(n), self.table, tp)
        return c


def psi(T, t, n):
    """Numeric coefficients (constant term first) of ``psi(x, t, n)`` for real ``n``."""
    return PsiTable(T).coeffs(t, n)


def phi_two_point(T, t1, n1, t2, n2):
    """Numeric coefficients of the two-point polynomial for real ``n1``, ``n2``."""
    T = as_diffop(T)
    k = T.order
    t1, t2 = complex(t1), complex(t2)
    out = np.zeros(1, dtype=complex)
    for j, q in enumerate(T.coeffs):
        if not q:
            continue
        inner = np.zeros(1, dtype=complex)
        for i in range(j + 1):
            w = comb(j, i) * falling_factorial(float(n1), i) * falling_factorial(float(n2), j - i)
            if w == 0:
                continue
            f1 = npp.polypow([-t1, 1], k - i)
            f2 = npp.polypow([-t2, 1], k - j + i)
            inner = npp.polyadd(inner, w * npp.polymul(f1, f2))
        out = npp.polyadd(out, npp.polymul(q.to_numpy(), inner))
    return np.trim_zeros(out, "b") if np.any(out) else out[:1]


# ---------------------------------------------------------------------------
# truncations and substitutions

def truncated_symbol(T):
    """``sum_j a_j y^j x^(d_j)`` over the leading monomials ``a_j x^(d_j)`` of the Q_j."""
    T = as_diffop(T)
    return BiPoly({(q.degree, j): q.lc() for j, q in enumerate(T.coeffs) if q})


def psi_tilde(T):
    """``sum_j a_j n^j x^(d_j + k - j)`` as a BiPoly in ``(x, n)``."""
    T = as_diffop(T)
    k = T.order
    return BiPoly({(q.degree + k - j, j): q.lc() for j, q in enumerate(T.coeffs) if q})


def affine_substitute(T, a, b):
    """Express T in the variable X with ``x = aX + b``: coefficients ``Q_j(aX+b) a^(-j)``."""
    T = as_diffop(T)
    a, b = exact(a), exact(b)
    if a.is_zero():
        raise ZeroScale("affine substitution needs a != 0")
    return DiffOp([q.compose_affine(a, b) * (ONE / a ** j) for j, q in enumerate(T.coeffs)])


def rank_on_degree_n(T, n):
    """Exact rank of T restricted to polynomials of degree at most ``n``."""
    T = as_diffop(T)
    cols = [img for img in T.matrix(n)]
    rows = max((c.degree for c in cols), default=-1) + 1
    mat = [[c.coeff(i) for c in cols] for i in range(rows)]
    return _exact_rank(mat)


def _exact_rank(mat):
    mat = [list(r) for r in mat]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / pv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank
