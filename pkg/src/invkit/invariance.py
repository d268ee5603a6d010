"""Invariance decisions and certified lower bounds for invariant sets.

The large-disk decision is exact: symbol polynomials are built over the
Gaussian rationals, their gcd is exact and root locations relative to the
unit circle are counted exactly. Sampled checks (``disk_invariance_sampled``
and everything built on it) only ever falsify; a pass is reported as
``VerifiedSampled``, not as a proof.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .cloud import PointCloud
from .diffop import (P_ell, PsiTable, as_diffop, eigenpolynomial, f_ell,
                     psi_tilde, rank_on_degree_n, spectrum)
from .errors import (ConstantLeadingCoefficient, DegenerateForN,
                     EigenvalueCollision, NonRealCoefficients,
                     NonSquareFreeLeading, NotExactlySolvable, RankOne,
                     WrongShape)
from .geometry import convex_hull
from .newton import ConeDesc, classify_ne, ne_border, positive_cone
from .poly import Poly, format_poly, poly_gcd, poly_gcd_many, squarefree_part
from .roots import (count_disk_roots, count_half_plane_roots, find_roots,
                    interlace_and_wronskian, is_real_rooted,
                    roots_in_closed_unit_disk)
from .scalar import ExactComplex, exact, format_scalar

NOTE_UNBOUNDED = "all invariant sets unbounded"
NOTE_WHOLE_PLANE = "only invariant set is the whole plane"
NOTE_ALMOST = ("almost defining: only invariant set is the whole plane unless "
               "all leading constants are collinear through 0")


def _pairs(zs):
    return [[float(z.real), float(z.imag)] for z in np.atleast_1d(zs)]


def _roots_or_empty(p):
    return find_roots(p) if p.degree >= 1 else np.zeros(0, dtype=complex)


def fundamental_polygon(T):
    """Convex hull (counter-clockwise vertices) of the zeros of the leading coefficient."""
    T = as_diffop(T)
    if T.leading.degree < 1:
        raise ConstantLeadingCoefficient("the leading coefficient has no zeros")
    return convex_hull(find_roots(T.leading))


# ---------------------------------------------------------------------------
# large disks

@dataclass
class DiskDecision:
    verdict: str
    n: int
    rho_n: int
    gcd: Poly
    quotient: Poly
    gcd_zeros: np.ndarray
    quotient_zeros: np.ndarray
    gcd_counts: object = None
    quotient_counts: object = None
    witnesses: list = field(default_factory=list)

    def to_json(self):
        def counts(c):
            if c is None:
                return None
            return {"inside": c.inside, "boundary": c.boundary, "outside": c.outside}

        return {
            "verdict": self.verdict,
            "n": self.n,
            "rho_n": self.rho_n,
            "witnesses": self.witnesses,
            "diagnostics": {
                "g": format_poly(self.gcd),
                "quotient": format_poly(self.quotient),
                "g_zeros": _pairs(self.gcd_zeros),
                "quotient_zeros": _pairs(self.quotient_zeros),
                "g_counts": counts(self.gcd_counts),
                "quotient_counts": counts(self.quotient_counts),
            },
        }


def symbol_pieces(T, n):
    """``{ell: P_ell^n}`` for ``-n <= ell <= rho_n`` (zero polynomials omitted)."""
    T = as_diffop(T)
    rho = T.nth_fuchs_index(n)
    if rho is None:
        return rho, {}
    out = {}
    for ell in range(-n, rho + 1):
        p = P_ell(T, n, ell, check=False)
        if p:
            out[ell] = p
    return rho, out


def large_disk_decision(T, n, margin=1e-9, exact_count=True):
    """Decide whether every large enough closed disk centred at 0 is invariant for degree ``n``.

    Conditions: all zeros of ``g = gcd_ell P_ell^n`` in the closed unit disk
    and all zeros of ``P_rho^n / g`` in the open unit disk. With
    ``exact_count`` (default) both are settled by exact counting; otherwise
    numeric roots with ``margin`` are used and boundary cases yield
    ``Uncertain``.
    """
    T = as_diffop(T)
    rho, pieces = symbol_pieces(T, n)
    top = pieces.get(rho) if rho is not None else None
    if top is None or top.degree != n:
        deg = -1 if top is None else top.degree
        raise DegenerateForN(f"deg P_rho^{n} = {deg} != {n}: T is degenerate on degree {n}")
    if rank_on_degree_n(T, n) <= 1:
        raise RankOne(f"T has rank <= 1 on polynomials of degree <= {n}")
    g = poly_gcd_many(list(pieces.values()))
    q = top / g
    gz, qz = _roots_or_empty(g), _roots_or_empty(q)
    witnesses = []
    if exact_count:
        gc = count_disk_roots(g)
        qc = count_disk_roots(q)
        ok1 = gc.outside == 0
        ok2 = qc.outside == 0 and qc.boundary == 0
        verdict = "InvariantForLargeR" if ok1 and ok2 else "NotInvariantForLargeR"
    else:
        gc = qc = None
        # repeated zeros are ill-conditioned; the square-free parts have the same zero sets
        l1 = roots_in_closed_unit_disk(squarefree_part(g), margin, exact_count=False) if g.degree >= 1 else None
        l2 = (roots_in_closed_unit_disk(squarefree_part(q), margin, strict=True, exact_count=False)
              if q.degree >= 1 else None)
        verdicts = [loc.verdict for loc in (l1, l2) if loc is not None]
        if "SomeOutside" in verdicts:
            verdict = "NotInvariantForLargeR"
        elif "BoundaryUncertain" in verdicts:
            verdict = "Uncertain"
        else:
            verdict = "InvariantForLargeR"
        ok1 = l1 is None or l1.verdict == "AllInside"
        ok2 = l2 is None or l2.verdict == "AllInside"
    if not ok1:
        witnesses += [{"polynomial": "g", "zero": z} for z in _pairs(gz[np.abs(gz) > 1 - margin])]
    if not ok2:
        witnesses += [{"polynomial": "quotient", "zero": z} for z in _pairs(qz[np.abs(qz) >= 1 - margin])]
    return DiskDecision(verdict, n, rho, g, q, gz, qz, gc, qc, witnesses)


def th15_form(T, n):
    """ADVISORY half-plane form of the large-disk test (raw data only).

    Reports ``h = gcd(f_{-n}^n, ..., f_rho^n)`` and ``f_rho^n / h`` with their
    zeros tested against ``Re = -1/2``; the authoritative verdict is the one
    of ``large_disk_decision``, reported alongside for cross-checking.
    """
    T = as_diffop(T)
    rho = T.nth_fuchs_index(n)
    fs = [f_ell(T, n, ell, check=False) for ell in range(-n, rho + 1)]
    nonzero = [f for f in fs if f]
    h = poly_gcd_many(nonzero)
    top = fs[-1]
    q = top / h if top else Poly()
    half = Fraction(-1, 2)
    hc = count_half_plane_roots(h, half) if h.degree >= 1 else None
    qc = count_half_plane_roots(q, half) if q.degree >= 1 else None
    cond1 = hc is None or hc.outside == 0
    cond2 = qc is None or (qc.outside == 0 and qc.boundary == 0)
    report = {
        "label": "ADVISORY",
        "n": n,
        "rho_n": rho,
        "h": format_poly(h),
        "h_zeros": _pairs(_roots_or_empty(h)),
        "h_zeros_re_at_least_minus_half": cond1,
        "quotient": format_poly(q),
        "quotient_zeros": _pairs(_roots_or_empty(q)) if q else [],
        "quotient_zeros_re_above_minus_half": cond2,
        "half_plane_verdict": "InvariantForLargeR" if cond1 and cond2 else "NotInvariantForLargeR",
    }
    try:
        report["large_disk_decision"] = large_disk_decision(T, n).verdict
    except (DegenerateForN, RankOne) as exc:
        report["large_disk_decision"] = type(exc).__name__
    if T.order == 1:
        report.update(_order_one_probe(T, n))
    return report


def _order_one_probe(T, n):
    """Factorization probe ``T = P (beta n - x D)`` and the leading-coefficient test."""
    q1, q0 = T.coeff(1), T.coeff(0)
    out = {}
    if q1.coeff(0).is_zero():
        p = -(q1 // Poly.x())
        if q0 and p:
            quo, rem = divmod(q0, p)
            if not rem and quo.degree == 0:
                beta = quo.lc() / n
                out["factorization_beta"] = format_scalar(beta)
                out["beta_re_above_half"] = beta.re > Fraction(1, 2)
                return out
    if q0 and q1.degree == q0.degree + 1:
        ratio = q0.lc() / q1.lc()
        out["leading_ratio"] = format_scalar(ratio)
        out["leading_ratio_re_below_n_over_2"] = ratio.re < Fraction(n, 2)
    return out


def diagonal_disk_check(lambdas, n):
    """Disk test for diagonal operators ``x^i -> lambda_i x^i`` on degree ``n``."""
    lambdas = [exact(l) for l in lambdas]
    if len(lambdas) != n + 1:
        raise ValueError("need n+1 eigenvalues")
    p = Poly([lam * comb(n, i) for i, lam in enumerate(lambdas)])
    if not p:
        return {"InvariantAllR": True, "zeros": [], "polynomial": "0"}
    counts = count_disk_roots(p)
    return {"InvariantAllR": counts.outside == 0,
            "zeros": _pairs(_roots_or_empty(p)),
            "polynomial": format_poly(p)}


# ---------------------------------------------------------------------------
# sampled disk checks

@dataclass(frozen=True)
class SampledResult:
    verdict: str
    y: complex | None = None
    root: complex | None = None
    samples: int = 0

    def to_json(self):
        out = {"verdict": self.verdict, "samples": self.samples}
        if self.verdict == "Falsified":
            out["y"] = [self.y.real, self.y.imag]
            out["root"] = [self.root.real, self.root.imag]
        return out


def disk_samples(R, boundary_samples=64, interior_samples=64, center=0j):
    """Boundary circle first, then concentric rings inward, then the centre."""
    center = complex(center)
    b = R * np.exp(2j * np.pi * np.arange(boundary_samples) / boundary_samples)
    pts = [b]
    m = interior_samples - 1
    if m > 0:
        rings = max(1, int(math.isqrt(m)))
        per = [m // rings + (1 if r < m % rings else 0) for r in range(rings)]
        for r, cnt in enumerate(per):
            rad = R * (rings - r) / (rings + 1)
            phase = 0.5 * r
            pts.append(rad * np.exp(1j * (2 * np.pi * np.arange(cnt) / cnt + phase)))
    if interior_samples > 0:
        pts.append(np.zeros(1, dtype=complex))
    return center + np.concatenate(pts)


def image_roots(T, y, n, table=None, rel_trim=1e-13):
    """Roots of ``T((x-y)^n)``; empty when the image vanishes identically."""
    T = as_diffop(T)
    k = T.order
    if n >= k:
        table = table or PsiTable(T)
        c = table.coeffs(y, n)
        extra = np.full(n - k, complex(y))
    else:
        c = np.zeros(1, dtype=complex)
        for j, q in enumerate(T.coeffs[: n + 1]):
            ff = math.perm(n, j)
            term = np.polynomial.polynomial.polymul(
                q.to_numpy(), np.polynomial.polynomial.polypow([-complex(y), 1], n - j))
            c = np.polynomial.polynomial.polyadd(c, ff * term)
        extra = np.zeros(0, dtype=complex)
    scale = np.max(np.abs(c)) if c.size else 0.0
    if scale == 0:
        return None
    keep = np.flatnonzero(np.abs(c) > rel_trim * scale)
    c = c[: keep[-1] + 1]
    r = find_roots(c) if len(c) > 1 else np.zeros(0, dtype=complex)
    return np.concatenate([r, extra])


def disk_invariance_sampled(T, n, R, boundary_samples=64, interior_samples=64,
                            margin=1e-9, center=0j):
    """Falsification search for invariance of the closed disk of radius ``R``.

    Samples run in a fixed order and the first escaping root wins, so the
    result is deterministic.
    """
    T = as_diffop(T)
    table = PsiTable(T) if n >= T.order else None
    ys = disk_samples(R, boundary_samples, interior_samples, center)
    limit = R * (1 + margin)
    for y in ys:
        roots = image_roots(T, y, n, table)
        if roots is None or roots.size == 0:
            continue
        d = np.abs(roots - center)
        i = int(np.argmax(d))
        if d[i] > limit:
            return SampledResult("Falsified", complex(y), complex(roots[i]), len(ys))
    return SampledResult("VerifiedSampled", samples=len(ys))


@dataclass(frozen=True)
class NotFoundBelow:
    bound: float


def min_disk_radius(T, n, R_max, tol=1e-3, boundary_samples=64, interior_samples=64,
                    margin=1e-9, center=0j):
    """Bracket ``[R_lo, R_hi]`` of the sampled-invariance threshold, or NotFoundBelow."""
    def ok(R):
        if R <= 0:
            return False
        res = disk_invariance_sampled(T, n, R, boundary_samples, interior_samples, margin, center)
        return res.verdict == "VerifiedSampled"

    if not ok(R_max):
        return NotFoundBelow(float(R_max))
    lo, hi = 0.0, float(R_max)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return (lo, hi)


# ---------------------------------------------------------------------------
# Lame condition and hyperbolicity

@dataclass(frozen=True)
class LameResult:
    applies: bool
    residues: tuple
    exact: bool
    zeros: tuple


def _rational_roots(p):
    """Return the exact roots of ``p`` if all of them are Gaussian rationals, else None."""
    approx = find_roots(p)
    found = []
    rest = p
    for z in approx:
        cand = ExactComplex.from_complex(z, max_denominator=10**6)
        if rest.degree >= 1 and rest(cand).is_zero():
            found.append(cand)
            rest = rest // Poly([-cand, 1])
    return found if len(found) == p.degree else None


def lame_check(T, tol=1e-9):
    """Residues ``kappa_i = Q_{k-1}(x_i)/Q_k'(x_i)`` at the zeros of ``Q_k``."""
    T = as_diffop(T)
    k = T.order
    if k < 1 or any(T.coeff(j) for j in range(k - 1)):
        raise WrongShape("expected T = Q_k D^k + Q_{k-1} D^(k-1)")
    qk, qk1 = T.leading, T.coeff(k - 1)
    if qk.degree < 1:
        return LameResult(False, (), True, ())
    if poly_gcd(qk, qk.derivative()).degree >= 1:
        raise NonSquareFreeLeading("the leading coefficient has a repeated zero")
    dq = qk.derivative()
    rat = _rational_roots(qk)
    if rat is not None:
        res = tuple(qk1(z) / dq(z) for z in rat)
        ok = all(r.im == 0 and r.re >= 0 for r in res)
        zeros = tuple(complex(z) for z in rat)
        residues = tuple(complex(r) for r in res)
        exact_flag = True
    else:
        zs = find_roots(qk)
        residues = tuple(complex(qk1.evalf(z) / dq.evalf(z)) for z in zs)
        ok = all(abs(r.imag) <= tol and r.real >= -tol for r in residues)
        zeros = tuple(complex(z) for z in zs)
        exact_flag = False
    applies = qk1.degree < qk.degree and ok
    return LameResult(applies, residues, exact_flag, zeros)


def hb_split(T):
    """Write ``T = U(D) + x V(D)``; returns ``(U, V)`` as polynomials in the derivative."""
    T = as_diffop(T)
    if any(q.degree > 1 for q in T.coeffs):
        raise WrongShape("coefficients must have degree <= 1")
    U = Poly([q.coeff(0) for q in T.coeffs])
    V = Poly([q.coeff(1) for q in T.coeffs])
    return U, V


def xi_normalize(U, V):
    """Rotate ``(U, V)`` by a common phase so both become real, if possible."""
    lead = V.lc() if V else U.lc()
    xi = lead.conjugate()
    U2, V2 = U * xi, V * xi
    if not (U2.is_real() and V2.is_real()):
        raise NonRealCoefficients("no common phase makes U and V real")
    return U2, V2


def hb_real_line_check(U, V):
    """Whether ``U(D) + x V(D)`` (real ``U``, ``V``) maps real-rooted polynomials to real-rooted ones."""
    if not (U.is_real() and V.is_real()):
        raise NonRealCoefficients("U and V must be real")
    if not V:
        ok = is_real_rooted(U)
        return {"preserves_real_line": ok, "U_real_rooted": ok, "V_zero": True}
    u_rr, v_rr = is_real_rooted(U), is_real_rooted(V)
    rep = interlace_and_wronskian(V, U)
    ok = u_rr and v_rr and rep.interlacing and rep.wronskian_nonnegative
    return {"preserves_real_line": ok, "U_real_rooted": u_rr, "V_real_rooted": v_rr,
            "interlacing": rep.interlacing, "wronskian_nonnegative": rep.wronskian_nonnegative,
            "wronskian": format_poly(rep.wronskian, "y")}


def hb_check_operator(T):
    U, V = xi_normalize(*hb_split(T))
    return hb_real_line_check(U, V)


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True)
class ConstantCone:
    lambdas: tuple
    inverses: tuple
    cone: ConeDesc


def constant_coeff_cone(a):
    """Cone of inverse characteristic roots for ``sum_j a_j D^j``."""
    p = Poly([exact(c) for c in a])
    lams = tuple(complex(z) for z in _roots_or_empty(p))
    inv = tuple(1 / z for z in lams if z != 0)
    cone = positive_cone(inv) if inv else ConeDesc("Origin")
    return ConstantCone(lams, inv, cone)


@dataclass(frozen=True)
class EscapeData:
    border: object
    newton_class: str
    constants: tuple
    cone: ConeDesc


def escape_data(T):
    """NE data of the truncated psi-polynomial: class, leading constants, cone."""
    T = as_diffop(T)
    border = ne_border(psi_tilde(T))
    cls = classify_ne(border)
    consts = border.leading_constants()
    cone = positive_cone(consts) if consts else ConeDesc("Origin")
    return EscapeData(border, cls, consts, cone)


# ---------------------------------------------------------------------------
# lower bounds

def eigenroot_cloud(T, m_min, m_max):
    """Roots of the eigenpolynomials ``p_m`` whose eigenvalue strictly dominates all earlier ones."""
    T = as_diffop(T)
    if not T.is_exactly_solvable():
        raise NotExactlySolvable("eigenpolynomials need Fuchs index 0")
    lam = spectrum(T, m_max).eigenvalues
    pts, tags, admitted = [], [], []
    for m in range(max(m_min, 1), m_max + 1):
        if any(lam[j].abs2() >= lam[m].abs2() for j in range(m)):
            continue
        try:
            p = eigenpolynomial(T, m)
        except EigenvalueCollision:
            continue
        r = find_roots(p)
        pts.append(r)
        tags.append(np.full(len(r), m))
        admitted.append(m)
    pts = np.concatenate(pts) if pts else np.zeros(0, dtype=complex)
    tags = np.concatenate(tags) if tags else np.zeros(0, dtype=np.int64)
    meta = {"operator": str(T), "m_min": m_min, "m_max": m_max, "admitted": admitted}
    return PointCloud(pts, meta, tags)


@dataclass
class LowerBoundRegion:
    polygon: np.ndarray
    cone: ConeDesc | None
    cloud: PointCloud | None
    whole_plane: bool
    notes: list

    def to_json(self):
        out = {
            "polygon": _pairs(self.polygon),
            "cone": self.cone.to_json() if self.cone else None,
            "whole_plane": self.whole_plane,
            "notes": list(self.notes),
        }
        if self.cloud is not None:
            out["eigenroots"] = [{"m": int(t), "root": [z.real, z.imag]}
                                 for z, t in zip(self.cloud.points, self.cloud.tags)]
        return out


def lower_bound_region(T, n=0, m_max=8):
    """Sets contained in every invariant set (for degrees >= ``n``).

    Collects the fundamental polygon, the zeros of ``Q_0`` (when degree-0
    inputs are admitted, ``n == 0``, or when T is degenerate), the escape cone
    of degenerate operators and, for exactly solvable T, the eigenroot cloud.
    """
    T = as_diffop(T)
    notes = []
    pts = []
    if T.leading.degree >= 1:
        pts.append(find_roots(T.leading))
    basic = T.classify_basic()
    q0 = T.coeff(0)
    if q0.degree >= 1 and (n == 0 or not basic.nondegenerate):
        pts.append(find_roots(q0))
    cone = None
    whole = False
    if not basic.nondegenerate:
        esc = escape_data(T)
        cone = esc.cone
        notes.append(NOTE_UNBOUNDED)
        if esc.cone.variant == "FullPlane" or esc.newton_class == "Defining":
            whole = True
            notes.append(NOTE_WHOLE_PLANE)
        elif pts:
            notes.append("region is the Minkowski sum of the polygon and the cone")
    lam = _lame_or_none(T)
    if lam is not None and lam.applies:
        notes.append("Lame condition holds: the fundamental polygon is the minimal set")
    cloud = None
    if basic.exactly_solvable and m_max >= 1:
        cloud = eigenroot_cloud(T, 1, m_max)
    polygon = convex_hull(np.concatenate(pts)) if pts else np.zeros(0, dtype=complex)
    return LowerBoundRegion(polygon, cone, cloud, whole, notes)


def _lame_or_none(T):
    try:
        return lame_check(T)
    except (WrongShape, NonSquareFreeLeading):
        return None


# ---------------------------------------------------------------------------
# combined report

@dataclass
class OperatorReport:
    operator: str
    fuchs_index: int
    nondegenerate: bool
    exactly_solvable: bool
    newton_class: str
    fundamental_polygon: list
    escape_cone: ConeDesc
    leading_constants: tuple
    subclass: str
    notes: list

    def to_json(self):
        return {
            "operator": self.operator,
            "fuchs_index": self.fuchs_index,
            "nondegenerate": self.nondegenerate,
            "degenerate": not self.nondegenerate,
            "exactly_solvable": self.exactly_solvable,
            "newton_class": self.newton_class,
            "fundamental_polygon": self.fundamental_polygon,
            "escape_cone": self.escape_cone.to_json(),
            "leading_constants": _pairs(self.leading_constants) if self.leading_constants else [],
            "subclass": self.subclass,
            "notes": list(self.notes),
        }


def subclass_of(T, border=None):
    """Split of constant-leading operators into constant coefficients (A) and the B shape."""
    T = as_diffop(T)
    k = T.order
    if T.leading.degree > 0:
        return "NotConstantLeading"
    if all(q.degree <= 0 for q in T.coeffs):
        return "A-ConstantCoefficients"
    if k >= 1 and T.coeff(k - 1).degree == 1 and all(T.coeff(j).degree <= 1 for j in range(k - 1)):
        j_min = min(j for j in range(k) if T.coeff(j).degree == 1)
        if all(not T.coeff(l) for l in range(j_min - 1)):
            border = border or ne_border(psi_tilde(T), with_constants=False)
            return f"B({len(border.edges)})"
    return "Other"


def classify_operator(T):
    T = as_diffop(T)
    basic = T.classify_basic()
    esc = escape_data(T)
    try:
        poly = _pairs(fundamental_polygon(T))
    except ConstantLeadingCoefficient:
        poly = []
    notes = []
    if not basic.nondegenerate:
        notes.append(NOTE_UNBOUNDED)
    whole = esc.newton_class == "Defining" or esc.cone.variant == "FullPlane"
    if esc.newton_class == "AlmostDefining":
        notes.append(NOTE_ALMOST)
    if whole:
        notes.append(NOTE_WHOLE_PLANE)
    return OperatorReport(
        operator=str(T),
        fuchs_index=T.fuchs_index(),
        nondegenerate=basic.nondegenerate,
        exactly_solvable=basic.exactly_solvable,
        newton_class=esc.newton_class,
        fundamental_polygon=poly,
        escape_cone=esc.cone,
        leading_constants=esc.constants,
        subclass=subclass_of(T, esc.border),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# JSON schemas

_POINT = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_COUNTS = {"type": ["object", "null"],
           "properties": {k: {"type": "integer"} for k in ("inside", "boundary", "outside")}}

CONE_SCHEMA = {
    "type": "object",
    "required": ["variant", "directions"],
    "properties": {
        "variant": {"enum": ["FullPlane", "HalfPlane", "Sector", "Line", "Ray", "Origin"]},
        "directions": {"type": "array", "items": _POINT},
    },
}

DISK_DECISION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "DiskDecision",
    "type": "object",
    "required": ["verdict", "n", "rho_n", "witnesses", "diagnostics"],
    "properties": {
        "verdict": {"enum": ["InvariantForLargeR", "NotInvariantForLargeR", "Uncertain"]},
        "n": {"type": "integer"},
        "rho_n": {"type": "integer"},
        "witnesses": {"type": "array", "items": {
            "type": "object", "required": ["polynomial", "zero"],
            "properties": {"polynomial": {"type": "string"}, "zero": _POINT}}},
        "diagnostics": {
            "type": "object",
            "required": ["g", "quotient", "g_zeros", "quotient_zeros"],
            "properties": {
                "g": {"type": "string"},
                "quotient": {"type": "string"},
                "g_zeros": {"type": "array", "items": _POINT},
                "quotient_zeros": {"type": "array", "items": _POINT},
                "g_counts": _COUNTS,
                "quotient_counts": _COUNTS,
            },
        },
        "sampled": {"type": "object"},
    },
}

OPERATOR_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "OperatorReport",
    "type": "object",
    "required": ["fuchs_index", "nondegenerate", "exactly_solvable", "newton_class",
                 "fundamental_polygon", "escape_cone", "subclass", "notes"],
    "properties": {
        "operator": {"type": "string"},
        "fuchs_index": {"type": "integer"},
        "nondegenerate": {"type": "boolean"},
        "degenerate": {"type": "boolean"},
        "exactly_solvable": {"type": "boolean"},
        "newton_class": {"enum": ["Defining", "AlmostDefining", "NonDefining", "SinglePoint"]},
        "fundamental_polygon": {"type": "array", "items": _POINT},
        "escape_cone": CONE_SCHEMA,
        "leading_constants": {"type": "array", "items": _POINT},
        "subclass": {"type": "string",
                     "pattern": r"^(NotConstantLeading|A-ConstantCoefficients|B\([1-9][0-9]*\)|Other)$"},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}

SAMPLED_RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SampledResult",
    "type": "object",
    "required": ["verdict", "samples"],
    "properties": {
        "verdict": {"enum": ["VerifiedSampled", "Falsified"]},
        "samples": {"type": "integer", "minimum": 0},
        "y": _POINT,
        "root": _POINT,
    },
}

NE_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "NEReport",
    "type": "object",
    "required": ["vertices", "edges", "newton_class", "u_infty_degree", "leading_constants", "cone"],
    "properties": {
        "vertices": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "edges": {"type": "array", "items": {
            "type": "object",
            "required": ["endpoints", "slope", "beta", "growth", "integer_length", "leading_constants"],
            "properties": {
                "slope": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
                "beta": {"type": "integer", "minimum": 1},
                "integer_length": {"type": "integer", "minimum": 2},
                "leading_constants": {"type": "array", "items": _POINT},
            },
        }},
        "newton_class": {"enum": ["Defining", "AlmostDefining", "NonDefining", "SinglePoint"]},
        "u_infty_degree": {"type": "integer", "minimum": 0},
        "leading_constants": {"type": "array", "items": _POINT},
        "cone": CONE_SCHEMA,
    },
}

LOWER_BOUND_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "LowerBoundRegion",
    "type": "object",
    "required": ["polygon", "cone", "whole_plane", "notes"],
    "properties": {
        "polygon": {"type": "array", "items": _POINT},
        "cone": {"oneOf": [{"type": "null"}, CONE_SCHEMA]},
        "whole_plane": {"type": "boolean"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "eigenroots": {"type": "array", "items": {
            "type": "object", "required": ["m", "root"],
            "properties": {"m": {"type": "integer"}, "root": _POINT}}},
    },
}

CLOUD_METADATA_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "PointCloudMetadata",
    "type": "object",
    "required": ["seed", "steps", "burn_in", "chains", "operator", "mode", "points"],
    "properties": {
        "seed": {"type": "integer"},
        "steps": {"type": "integer", "minimum": 1},
        "burn_in": {"type": "integer", "minimum": 0},
        "chains": {"type": "integer", "minimum": 1},
        "operator": {"type": "string"},
        "mode": {"enum": ["Integer", "ContinuousUniform", "TwoPoint"]},
        "points": {"type": "integer", "minimum": 0},
    },
}
