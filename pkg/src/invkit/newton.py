"""Northeastern borders of Newton polygons and the data read off them.

Exponent pairs are ``(i, j)`` with ``i`` the exponent of the first variable
``u`` (the one whose roots are tracked) and ``j`` that of the second
variable ``v`` (the large parameter ``w``).
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DegenerateAtW, EmptyInput, PoleAtOne, SinglePointBorder
from .poly import BiPoly, Poly
from .roots import find_roots
from .scalar import ZERO

ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class EdgeData:
    endpoints: tuple
    slope: Fraction
    integer_length: int
    edge_poly: Poly | None = None
    leading_constants: tuple = ()

    @property
    def alpha(self):
        return -self.slope.numerator

    @property
    def beta(self):
        return self.slope.denominator

    @property
    def growth(self):
        """Exponent ``alpha/beta`` in ``u ~ eps * w^(alpha/beta)``."""
        return -self.slope

    @property
    def u_length(self):
        return self.endpoints[1][0] - self.endpoints[0][0]


@dataclass(frozen=True)
class NEBorder:
    vertices: tuple
    edges: tuple = ()

    @property
    def is_single_point(self):
        return len(self.vertices) == 1

    @property
    def north(self):
        return self.vertices[0]

    @property
    def east(self):
        return self.vertices[-1]

    def leading_constants(self):
        return tuple(c for e in self.edges for c in e.leading_constants)


def _support(obj):
    if isinstance(obj, BiPoly):
        if not obj:
            raise EmptyInput("the zero polynomial has no Newton polygon")
        return obj.support()
    pts = sorted({(int(i), int(j)) for i, j in obj})
    if not pts:
        raise EmptyInput("empty point set")
    return pts


def _border_vertices(points):
    jn = max(j for _, j in points)
    i_n = max(i for i, j in points if j == jn)
    top = {}
    for i, j in points:
        if i >= i_n and j > top.get(i, -1):
            top[i] = j
    chain = []
    for p in sorted(top.items()):
        while len(chain) >= 2:
            (i1, j1), (i2, j2) = chain[-2], chain[-1]
            # drop the middle point unless the turn is strictly clockwise
            if (i2 - i1) * (p[1] - j1) - (j2 - j1) * (p[0] - i1) >= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


def ne_border(B, with_constants=True):
    """NE border of a BiPoly (or of a bare set of lattice points).

    Edge polynomials and leading constants are attached when ``B`` is a
    BiPoly and ``with_constants`` is set.
    """
    pts = _support(B)
    verts = _border_vertices(pts)
    edges = []
    for (i1, j1), (i2, j2) in zip(verts, verts[1:]):
        di, dj = i2 - i1, j2 - j1
        slope = Fraction(dj, di)
        length = math.gcd(di, -dj) + 1
        poly = None
        consts = ()
        if isinstance(B, BiPoly) and with_constants:
            poly = _edge_poly(B, (i1, j1), (i2, j2))
            consts = tuple(complex(r) for r in find_roots(poly) if r != 0)
        edges.append(EdgeData(((i1, j1), (i2, j2)), slope, length, poly, consts))
    return NEBorder(tuple(verts), tuple(edges))


def _edge_poly(B, p, q):
    (i1, j1), (i2, j2) = p, q
    coeffs = [ZERO] * (i2 - i1 + 1)
    for (i, j), c in B.terms.items():
        if i1 <= i <= i2 and (i - i1) * (j2 - j1) == (j - j1) * (i2 - i1):
            coeffs[i - i1] = c
    return Poly(coeffs)


def leading_constants(B):
    """Per-edge data (edge polynomial and its nonzero roots) of the NE border of ``B``."""
    border = ne_border(B)
    if border.is_single_point:
        raise SinglePointBorder("the NE border is a single point")
    return list(border.edges)


def u_infty_degree(B):
    """Number of roots in ``u`` escaping to infinity as ``v`` grows: ``i_e - i_n``."""
    border = B if isinstance(B, NEBorder) else ne_border(B, with_constants=False)
    return border.east[0] - border.north[0]


def classify_ne(border):
    """Return ``"Defining"``, ``"AlmostDefining"``, ``"NonDefining"`` or ``"SinglePoint"``."""
    if not isinstance(border, NEBorder):
        border = ne_border(border, with_constants=False)
    if border.is_single_point:
        return "SinglePoint"
    if any(e.beta >= 3 for e in border.edges):
        return "Defining"
    halves = [e for e in border.edges if e.beta == 2]
    if len(halves) >= 2 or any(e.integer_length > 2 for e in halves):
        return "AlmostDefining"
    return "NonDefining"


def affine_map_A(points, k):
    """``(i, j) -> (i + k - j, j)``."""
    return [(i + k - j, j) for i, j in points]


def affine_map_A_inverse(points, k):
    return [(i - k + j, j) for i, j in points]


@dataclass(frozen=True)
class ShiftedBorder:
    """NE border of the truncated psi-polynomial and its pull-back under ``A^-1``."""

    vertices: tuple
    psi_border: NEBorder


def shifted_ne_border(T):
    from .diffop import as_diffop, psi_tilde

    T = as_diffop(T)
    border = ne_border(psi_tilde(T))
    return ShiftedBorder(tuple(affine_map_A_inverse(border.vertices, T.order)), border)


def slope_convert(sl):
    """``asl = sl / (1 - sl)``."""
    sl = Fraction(sl)
    if sl == 1:
        raise PoleAtOne("slope 1 has no converted value")
    return sl / (1 - sl)


def slope_convert_inverse(asl):
    """``sl = asl / (1 + asl)``."""
    asl = Fraction(asl)
    if asl == -1:
        raise PoleAtOne("converted slope -1 has no preimage")
    return asl / (1 + asl)


# ---------------------------------------------------------------------------
# positive cones

@dataclass(frozen=True)
class ConeDesc:
    """Positive hull of a set of planar directions.

    ``variant`` is one of FullPlane, HalfPlane, Sector, Line, Ray, Origin;
    ``directions`` holds unit vectors: the inward normal for HalfPlane, the
    two bounding rays (counter-clockwise order) for Sector and a single
    direction for Line and Ray.
    """

    variant: str
    directions: tuple = field(default=())

    def to_json(self):
        return {"variant": self.variant,
                "directions": [[d.real, d.imag] for d in self.directions]}

    def is_proper(self):
        return self.variant not in ("FullPlane",)


def positive_cone(dirs, tol=ANGLE_TOL):
    dirs = [complex(d) for d in dirs]
    if not dirs:
        raise EmptyInput("positive_cone needs at least one direction")
    dirs = [d for d in dirs if d != 0]
    if not dirs:
        return ConeDesc("Origin")
    angles = sorted(cmath.phase(d) % (2 * math.pi) for d in dirs)
    uniq = [angles[0]]
    for a in angles[1:]:
        if a - uniq[-1] > tol:
            uniq.append(a)
    if len(uniq) > 1 and uniq[0] + 2 * math.pi - uniq[-1] <= tol:
        uniq.pop()
    if len(uniq) == 1:
        return ConeDesc("Ray", (cmath.rect(1, uniq[0]),))
    gaps = [b - a for a, b in zip(uniq, uniq[1:])] + [uniq[0] + 2 * math.pi - uniq[-1]]
    g = int(np.argmax(gaps))
    gap = gaps[g]
    start = uniq[g]
    end = uniq[(g + 1) % len(uniq)]
    if gap < math.pi - tol:
        return ConeDesc("FullPlane")
    if abs(gap - math.pi) <= tol:
        if len(uniq) == 2:
            a = uniq[0]
            a = a if -math.pi / 2 < _wrap(a) <= math.pi / 2 else a + math.pi
            return ConeDesc("Line", (cmath.rect(1, _wrap(a)),))
        return ConeDesc("HalfPlane", (cmath.rect(1, end + math.pi / 2),))
    return ConeDesc("Sector", (cmath.rect(1, end), cmath.rect(1, start)))


def _wrap(a):
    """Angle reduced to (-pi, pi]."""
    a = math.fmod(a, 2 * math.pi)
    if a > math.pi:
        a -= 2 * math.pi
    elif a <= -math.pi:
        a += 2 * math.pi
    return a


def asymptotic_roots(B, w):
    """Predicted escaping roots ``eps * w^(alpha/beta)`` of ``B(u, w)`` for large ``w > 0``."""
    border = ne_border(B)
    lead = max(i for i, _ in B.terms)
    lc = sum(complex(c) * w ** j for (i, j), c in B.terms.items() if i == lead)
    if abs(lc) == 0 or not np.isfinite(lc):
        raise DegenerateAtW(f"leading coefficient in u vanishes at w = {w}")
    out = []
    for e in border.edges:
        scale = float(w) ** float(e.growth)
        out.extend(eps * scale for eps in e.leading_constants)
    return np.array(out, dtype=complex)


def border_report(B):
    """JSON-ready summary of the NE border of ``B``: edges, leading constants and cone."""
    from .poly import format_poly

    border = ne_border(B)
    consts = border.leading_constants()
    cone = positive_cone(consts) if consts else ConeDesc("Origin")
    edges = []
    for e in border.edges:
        edges.append({
            "endpoints": [list(p) for p in e.endpoints],
            "slope": str(e.slope),
            "beta": e.beta,
            "growth": str(e.growth),
            "integer_length": e.integer_length,
            "edge_polynomial": format_poly(e.edge_poly, "e") if e.edge_poly is not None else None,
            "leading_constants": [[c.real, c.imag] for c in e.leading_constants],
        })
    return {
        "vertices": [list(v) for v in border.vertices],
        "edges": edges,
        "newton_class": classify_ne(border),
        "u_infty_degree": u_infty_degree(border),
        "leading_constants": [[c.real, c.imag] for c in consts],
        "cone": cone.to_json(),
    }
