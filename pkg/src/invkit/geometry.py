"""Planar convex hulls and distances for complex point sets."""

import numpy as np
from scipy.spatial import cKDTree


def convex_hull(points, tol=1e-12):
    """Counter-clockwise hull vertices of complex ``points`` (monotone chain).

    Returns one point for a point set of diameter ``<= tol`` and the two
    endpoints for (numerically) collinear sets.
    """
    pts = np.unique(np.asarray(points, dtype=complex).ravel())
    if pts.size == 0:
        return pts
    order = np.lexsort((pts.imag, pts.real))
    pts = pts[order]
    scale = max(1.0, float(np.max(np.abs(pts))))
    eps = tol * scale
    if np.max(np.abs(pts - pts[0])) <= eps:
        return pts[:1]

    def cross(o, a, b):
        return (a - o).real * (b - o).imag - (a - o).imag * (b - o).real

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= eps * abs(lower[-1] - lower[-2]):
            lower.pop()
        lower.append(p)
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= eps * abs(upper[-1] - upper[-2]):
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return np.array(hull, dtype=complex)


def _segment_distance(z, a, b):
    ab = b - a
    den = abs(ab) ** 2
    if den == 0:
        return np.abs(z - a)
    t = ((z - a) * np.conj(ab)).real / den
    t = np.clip(t, 0.0, 1.0)
    return np.abs(z - (a + t * ab))


def distance_to_hull(z, hull):
    """Euclidean distance from each ``z`` to the convex polygon ``hull`` (0 inside)."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    hull = np.asarray(hull, dtype=complex)
    if hull.size == 1:
        return np.abs(z - hull[0])
    if hull.size == 2:
        return _segment_distance(z, hull[0], hull[1])
    edge_d = np.min([_segment_distance(z, a, b) for a, b in zip(hull, np.roll(hull, -1))], axis=0)
    inside = np.ones(z.shape, dtype=bool)
    for a, b in zip(hull, np.roll(hull, -1)):
        e = b - a
        inside &= (e.real * (z - a).imag - e.imag * (z - a).real) >= 0
    return np.where(inside, 0.0, edge_d)


def hausdorff_distance(a, b):
    """Symmetric Hausdorff distance between two finite complex point sets."""
    pa = np.column_stack([np.real(a), np.imag(a)])
    pb = np.column_stack([np.real(b), np.imag(b)])
    da, _ = cKDTree(pb).query(pa)
    db, _ = cKDTree(pa).query(pb)
    return float(max(da.max(), db.max()))
