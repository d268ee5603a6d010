"""Numeric root finding and exact root-location tests.

``find_roots`` is an Aberth-Ehrlich simultaneous iteration. The location
tests count roots exactly: a region (disk, half-plane) is mapped onto the
upper half-plane by a Moebius or affine substitution and the upper-half-plane
count comes from a Cauchy index computed with Sturm sequences over the
rationals.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NonConvergence, NonRealCoefficients, ZeroPolynomial
from .poly import Poly
from .scalar import I, exact


# ---------------------------------------------------------------------------
# Aberth-Ehrlich

def _as_coeffs(p):
    if isinstance(p, Poly):
        c = p.to_numpy()
    else:
        c = np.asarray(p, dtype=complex)
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return c[:0]
    return c[: nz[-1] + 1]


def _initial_guesses(c):
    """Points on circles read off the upper hull of ``(i, log|c_i|)``."""
    d = len(c) - 1
    idx = np.flatnonzero(c)
    logs = np.log(np.abs(c[idx]))
    hull = []
    for i, y in zip(idx, logs):
        while len(hull) >= 2:
            (i1, y1), (i2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (i - i1) <= (y - y1) * (i2 - i1):
                hull.pop()
            else:
                break
        hull.append((i, y))
    z = np.empty(d, dtype=complex)
    pos = 0
    for (i1, y1), (i2, y2) in zip(hull, hull[1:]):
        m = i2 - i1
        r = np.exp((y1 - y2) / m)
        ang = 2 * np.pi * np.arange(m) / m + 2 * np.pi * pos / d + 0.4
        z[pos:pos + m] = r * np.exp(1j * ang)
        pos += m
    return z


def _newton_ratio(c, z):
    """``p(z)/p'(z)``, evaluated on the reversed polynomial when ``|z| > 1``."""
    d = len(c) - 1
    out = np.empty_like(z)
    small = np.abs(z) <= 1
    if small.any():
        zs = z[small]
        p = np.full(zs.shape, c[-1])
        dp = np.zeros_like(zs)
        for a in c[-2::-1]:
            dp = dp * zs + p
            p = p * zs + a
        with np.errstate(divide="ignore", invalid="ignore"):
            out[small] = p / dp
    big = ~small
    if big.any():
        zb = z[big]
        w = 1 / zb
        r = np.full(zb.shape, c[0])
        dr = np.zeros_like(zb)
        for a in c[1:]:
            dr = dr * w + r
            r = r * w + a
        with np.errstate(divide="ignore", invalid="ignore"):
            out[big] = zb / (d - w * dr / r)
    return out


# sweeps before the rounding-level stop applies; later sweeps only resample noise
_GRACE = 50


def _at_noise_level(c, z):
    """``|p(z)|`` within rounding error of Horner evaluation (reversed when ``|z| > 1``)."""
    a = np.abs(c)
    big = np.abs(z) > 1
    w = np.where(big, 1 / np.where(big, z, 1), z)
    fwd = np.where(big[:, None], c[None, :], c[::-1][None, :])
    mag = np.where(big[:, None], a[None, :], a[::-1][None, :])
    p = np.zeros(z.shape, dtype=complex)
    m = np.zeros(z.shape)
    aw = np.abs(w)
    for j in range(len(c)):
        p = p * w + fwd[:, j]
        m = m * aw + mag[:, j]
    return np.abs(p) <= 16 * np.finfo(float).eps * len(c) * m


def residual_bound_ok(c, r, tol):
    """Check ``|p(r)| <= tol * max|c| * (1+|r|)^deg`` (scaled to avoid overflow)."""
    c = np.asarray(c, dtype=complex)
    r = np.atleast_1d(np.asarray(r, dtype=complex))
    scale = 1 + np.abs(r)
    # Horner on p(r) / (1+|r|)^d
    u = r / scale
    inv = np.ones(r.shape)
    acc = np.full(r.shape, c[-1], dtype=complex)
    for a in c[-2::-1]:
        inv = inv / scale
        acc = acc * u + a * inv
    return np.all(np.abs(acc) <= tol * np.max(np.abs(c)) * (1 + 1e-12))


def _quadratic(c):
    a0, a1, a2 = c
    disc = np.sqrt(a1 * a1 - 4 * a2 * a0)
    # pick the sign that avoids cancellation
    if (a1.conjugate() * disc).real < 0:
        disc = -disc
    q = -(a1 + disc) / 2
    if q == 0:
        return np.array([0j, 0j])
    return np.array([q / a2, a0 / q])


def _cluster(z, scale):
    """Average roots closer than ``1e-8 * scale`` (multiple roots)."""
    rad = 1e-8 * scale
    n = len(z)
    if n < 2:
        return z
    label = np.arange(n)
    for a in range(n):
        for b in range(a + 1, n):
            if abs(z[a] - z[b]) <= rad:
                la, lb = label[a], label[b]
                label[label == lb] = la
    out = z.copy()
    for lab in np.unique(label):
        members = label == lab
        if members.sum() > 1:
            out[members] = z[members].mean()
    return out


def find_roots(p, tol=1e-10, max_iter=800):
    """All complex roots of ``p`` with multiplicity.

    ``p`` is a Poly or a coefficient array (constant term first). Raises
    NonConvergence when a root fails the residual bound after ``max_iter``
    sweeps.
    """
    c = _as_coeffs(p)
    if len(c) < 2:
        raise ZeroPolynomial("find_roots needs degree >= 1")
    nz = np.flatnonzero(c)[0]
    zeros = np.zeros(nz, dtype=complex)
    c = c[nz:]
    d = len(c) - 1
    if d == 0:
        return zeros
    if d == 1:
        return np.concatenate([zeros, [-c[0] / c[1]]])
    if d == 2:
        return np.concatenate([zeros, _quadratic(c)])

    z = _initial_guesses(c)
    active = np.ones(d, dtype=bool)
    eps = np.finfo(float).eps
    for sweep in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        ratio = _newton_ratio(c, z[idx])
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1
        s = (1 / diff).sum(axis=1) - 1
        with np.errstate(divide="ignore", invalid="ignore"):
            step = ratio / (1 - ratio * s)
        bad = ~np.isfinite(step)
        step[bad] = 0
        z[idx] -= step
        done = (np.abs(step) <= 4 * eps * np.abs(z[idx])) | bad | (ratio == 0)
        # multiple roots never meet the step test; stop once the residual is pure rounding
        if sweep >= _GRACE:
            done |= _at_noise_level(c, z[idx])
        active[idx[done]] = False

    scale = max(1.0, float(np.max(np.abs(z))))
    z = _cluster(z, scale)
    if not residual_bound_ok(c, z, tol):
        raise NonConvergence(f"Aberth iteration did not converge for degree {d}")
    return np.concatenate([zeros, z])


# ---------------------------------------------------------------------------
# exact real-coefficient helpers (lists of Fractions, constant term first)

def _rtrim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _rrem(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        q = a[i] / lead
        if q:
            for j in range(db + 1):
                a[i - db + j] -= q * b[j]
    return _rtrim(a[:db])


def _rquo(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    out = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        q = a[i] / lead
        out[i - db] = q
        if q:
            for j in range(db + 1):
                a[i - db + j] -= q * b[j]
    return out


def _rnormalize(a):
    lead = abs(a[-1])
    return [x / lead for x in a]


def _rgcd(a, b):
    a, b = _rtrim(a), _rtrim(b)
    while b:
        a, b = b, _rrem(a, b)
    return [x / a[-1] for x in a]


def _rderiv(a):
    return _rtrim([a[i] * i for i in range(1, len(a))])


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _sturm_variations(f0, f1):
    """Sign variations at -inf and +inf of the Sturm chain started by f0, f1."""
    chain = [_rnormalize(f0)]
    if f1:
        chain.append(_rnormalize(f1))
        while True:
            r = _rrem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(_rnormalize([-x for x in r]))
    plus = [1 if q[-1] > 0 else -1 for q in chain]
    minus = [s * (-1) ** (len(q) - 1) for s, q in zip(plus, chain)]
    return _sign_changes(minus), _sign_changes(plus)


def _cauchy_index(num, den):
    """Cauchy index of ``num/den`` over the real line."""
    vm, vp = _sturm_variations(den, num)
    return vm - vp


def _distinct_real_roots(a):
    vm, vp = _sturm_variations(a, _rderiv(a))
    return vm - vp


def _yun(a):
    a = _rtrim(a)
    out = []
    if len(a) < 2:
        return out
    da = _rderiv(a)
    g = _rgcd(a, da)
    b = _rquo(a, g)
    c = _rquo(da, g)
    d = _rtrim([x - y for x, y in _zip_pad(c, _rderiv(b))])
    i = 1
    while len(b) > 1:
        h = _rgcd(b, d) if d else [x / b[-1] for x in b]
        if len(h) > 1:
            out.append((h, i))
        b = _rquo(b, h)
        c = _rquo(d, h) if d else []
        d = _rtrim([x - y for x, y in _zip_pad(c, _rderiv(b))])
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _real_roots_with_multiplicity(a):
    return sum(mult * _distinct_real_roots(s) for s, mult in _yun(a))


def _real_coeffs(p, what="polynomial"):
    if not p.is_real():
        raise NonRealCoefficients(f"{what} has non-real coefficients")
    return [c.re for c in p.coeffs]


# ---------------------------------------------------------------------------
# exact counting

@dataclass(frozen=True)
class HalfPlaneCount:
    """Root counts (with multiplicity) relative to the real axis."""

    upper: int
    real: int
    lower: int


def count_upper_half_plane(p):
    """Exactly count roots of ``p`` above, on and below the real axis."""
    if not p:
        raise ZeroPolynomial("the zero polynomial has no root count")
    p = p.monic()
    d = p.degree
    if d == 0:
        return HalfPlaneCount(0, 0, 0)
    re = [c.re for c in p.coeffs]
    im = _rtrim([c.im for c in p.coeffs])
    if not im:
        real = _real_roots_with_multiplicity(re)
        return HalfPlaneCount((d - real) // 2, real, (d - real) // 2)
    g = _rgcd(re, im)
    real_g = _real_roots_with_multiplicity(g) if len(g) > 1 else 0
    up_g = (len(g) - 1 - real_g) // 2
    a1 = _rquo(re, g)
    b1 = _rquo(im, g)
    d1 = len(a1) - 1
    up1 = (d1 - _cauchy_index(b1, a1)) // 2
    up = up_g + up1
    return HalfPlaneCount(up, real_g, d - up - real_g)


@dataclass(frozen=True)
class RegionCount:
    inside: int
    boundary: int
    outside: int


def count_disk_roots(p):
    """Exact counts of roots in |x| < 1, on |x| = 1 and in |x| > 1."""
    if not p:
        raise ZeroPolynomial("the zero polynomial has no root count")
    d = p.degree
    # x = (s+i)/(s-i) sends the upper half-plane to |x| > 1
    sp = Poly([I, 1])
    sm = Poly([-I, 1])
    q = Poly()
    for m, c in enumerate(p.coeffs):
        if c:
            q = q + (sp ** m) * (sm ** (d - m)) * c
    at_one = d - q.degree
    h = count_upper_half_plane(q)
    return RegionCount(h.lower, h.real + at_one, h.upper)


def count_half_plane_roots(p, c):
    """Exact counts of roots with Re > c (``outside`` field is Re < c)."""
    if not p:
        raise ZeroPolynomial("the zero polynomial has no root count")
    # x = c - i s: Im s > 0 <=> Re x > c
    q = p.compose_affine(-I, exact(c))
    h = count_upper_half_plane(q)
    return RegionCount(h.upper, h.real, h.lower)


# ---------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class Location:
    """Verdict of a root-location test.

    ``verdict`` is ``"AllInside"``, ``"SomeOutside"`` or ``"BoundaryUncertain"``;
    ``witness`` is the most offending numeric root for SomeOutside and the
    closest-to-boundary root for BoundaryUncertain.
    """

    verdict: str
    witness: complex | None = None
    counts: RegionCount | None = None
    roots: tuple = field(default=(), repr=False)


def _numeric_roots(p):
    if isinstance(p, Poly):
        return find_roots(p) if p.degree >= 1 else np.zeros(0, complex)
    c = _as_coeffs(p)
    return find_roots(c) if len(c) >= 2 else np.zeros(0, complex)


def _decide(counts, roots, dist, badness, margin, strict):
    """Shared verdict logic. ``dist``: signed distance to the boundary (>0 outside)."""
    if counts is not None:
        definite_out = counts.outside > 0 or (strict and counts.boundary > 0)
        if definite_out:
            return "SomeOutside", roots[np.argmax(badness)] if len(roots) else None
        if counts.boundary > 0 or np.any(np.abs(dist) < margin):
            return "BoundaryUncertain", roots[np.argmin(np.abs(dist))]
        return "AllInside", None
    if np.any(dist >= margin):
        return "SomeOutside", roots[np.argmax(badness)]
    if np.any(np.abs(dist) < margin):
        return "BoundaryUncertain", roots[np.argmin(np.abs(dist))]
    return "AllInside", None


def roots_in_closed_unit_disk(p, margin=1e-9, strict=False, exact_count=True):
    """Locate the roots of ``p`` relative to the closed unit disk.

    With ``strict`` the open disk is tested instead, so exact roots on the
    circle become definite violations.
    """
    if not isinstance(p, Poly):
        p = Poly.from_numpy(_as_coeffs(p)) if exact_count else p
    if isinstance(p, Poly) and not p:
        raise ZeroPolynomial("zero polynomial")
    counts = count_disk_roots(p) if exact_count else None
    roots = _numeric_roots(p)
    mod = np.abs(roots)
    v, w = _decide(counts, roots, mod - 1, mod, margin, strict)
    return Location(v, None if w is None else complex(w), counts, tuple(roots))


def roots_re_at_least(p, c, strict=False, margin=1e-9, exact_count=True):
    """Locate the roots of ``p`` relative to the half-plane Re >= c (Re > c if strict)."""
    if not isinstance(p, Poly):
        p = Poly.from_numpy(_as_coeffs(p)) if exact_count else p
    if isinstance(p, Poly) and not p:
        raise ZeroPolynomial("zero polynomial")
    counts = count_half_plane_roots(p, c) if exact_count else None
    roots = _numeric_roots(p)
    cf = float(exact(c).re)
    v, w = _decide(counts, roots, cf - roots.real, -roots.real, margin, strict)
    return Location(v, None if w is None else complex(w), counts, tuple(roots))


def real_root_count(p):
    """Number of real roots of a real polynomial, with multiplicity."""
    return _real_roots_with_multiplicity(_real_coeffs(p))


def is_real_rooted(p):
    a = _real_coeffs(p)
    if len(a) <= 1:
        return True
    return _real_roots_with_multiplicity(a) == len(a) - 1


@dataclass(frozen=True)
class WronskianSign:
    nonnegative: bool
    nonpositive: bool


def wronskian(f, g):
    """``W(f, g) = f' g - f g'``."""
    return f.derivative() * g - f * g.derivative()


def sign_of_real_poly(w):
    """Decide whether a real polynomial is >= 0 or <= 0 on the whole real line."""
    a = _real_coeffs(w)
    if not a:
        return WronskianSign(True, True)
    for s, mult in _yun(a):
        if mult % 2 == 1 and _distinct_real_roots(s) > 0:
            return WronskianSign(False, False)
    if (len(a) - 1) % 2 == 1:
        # odd degree always changes sign; unreachable after the check above
        return WronskianSign(False, False)
    return WronskianSign(a[-1] > 0, a[-1] < 0)


@dataclass(frozen=True)
class InterlaceReport:
    interlacing: bool
    wronskian_nonnegative: bool
    wronskian: Poly


def interlace_and_wronskian(f, g):
    """Interlacing of the zeros of real ``f``, ``g`` and the sign of ``W(f, g)``.

    Two real-rooted polynomials interlace exactly when their Wronskian keeps
    one sign on the real line; a constant interlaces with any real-rooted
    polynomial by convention.
    """
    if not f and not g:
        raise ZeroPolynomial("both polynomials are zero")
    _real_coeffs(f, "f")
    _real_coeffs(g, "g")
    w = wronskian(f, g)
    sign = sign_of_real_poly(w)
    if not (is_real_rooted(f) and is_real_rooted(g)):
        inter = False
    elif f.degree <= 0 or g.degree <= 0:
        inter = True
    else:
        inter = sign.nonnegative or sign.nonpositive
    return InterlaceReport(inter, sign.nonnegative, w)
