from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from invkit.errors import NonConvergence, NonRealCoefficients, ZeroPolynomial
from invkit.geometry import hausdorff_distance
from invkit.poly import Poly
from invkit.roots import (count_disk_roots, count_half_plane_roots, count_upper_half_plane,
                          find_roots, interlace_and_wronskian, is_real_rooted, real_root_count,
                          residual_bound_ok, roots_in_closed_unit_disk, roots_re_at_least,
                          sign_of_real_poly, wronskian)
from invkit.scalar import ExactComplex, I, exact

npp = np.polynomial.polynomial


def gaussian_rational(z, den=997):
    return ExactComplex.from_complex(z, max_denominator=den)


def random_roots_off_circle(rng, degree, gap=1e-3):
    out = []
    while len(out) < degree:
        z = 2.0 * (rng.random() - 0.5) + 2j * (rng.random() - 0.5)
        z *= rng.choice([0.5, 1.0, 2.0])
        q = gaussian_rational(z)
        if abs(abs(complex(q)) - 1) >= gap:
            out.append(q)
    return out


def test_matches_numpy_roots(rng):
    for _ in range(50):
        d = int(rng.integers(1, 13))
        c = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
        ours = find_roots(c)
        ref = np.roots(c[::-1])
        assert len(ours) == d
        assert hausdorff_distance(ours, ref) < 1e-7 * max(1, np.max(np.abs(ref)))


def test_residual_postcondition(rng):
    for _ in range(30):
        d = int(rng.integers(3, 20))
        c = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
        r = find_roots(c)
        assert residual_bound_ok(c, r, 1e-10)


def test_zero_roots_and_multiplicities():
    p = Poly.from_roots([0, 0, 1, 1, 1, -2])
    r = np.sort_complex(find_roots(p))
    assert np.allclose(r, [-2, 0, 0, 1, 1, 1], atol=1e-5)
    assert np.sum(r == 0) == 2


def test_low_degree_closed_forms():
    assert find_roots(Poly([2, 4]))[0] == -0.5
    r = find_roots(Poly([1, 0, 1]))
    assert np.allclose(np.sort_complex(r), [-1j, 1j])


def test_bad_inputs():
    with pytest.raises(ZeroPolynomial):
        find_roots(Poly([3]))
    with pytest.raises(NonConvergence):
        find_roots(np.arange(1, 10, dtype=complex), max_iter=1)


def test_perturbation_stability(rng):
    for _ in range(20):
        roots = (rng.random(6) * 4 - 2) + 1j * (rng.random(6) * 4 - 2)
        if np.min(np.abs(roots[:, None] - roots[None, :]) + 9 * np.eye(6)) < 0.3:
            continue
        c = npp.polyfromroots(roots)
        pert = c * (1 + 1e-12 * rng.normal(size=c.size))
        assert hausdorff_distance(find_roots(c), find_roots(pert)) <= 1e-6


# -- exact counting ----------------------------------------------------------

@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 4)),
                min_size=1, max_size=6))
def test_upper_half_plane_count_matches_construction(triples):
    roots = [ExactComplex(Fraction(a, d), Fraction(b, d)) for a, b, d in triples]
    p = Poly.from_roots(roots, lead=ExactComplex(2, -3))
    c = count_upper_half_plane(p)
    assert c.upper == sum(r.im > 0 for r in roots)
    assert c.real == sum(r.im == 0 for r in roots)
    assert c.lower == sum(r.im < 0 for r in roots)


@given(st.lists(st.sampled_from([1, -1, "i", "-i", "3/5+4/5i", "1/2", "2i", "-3/2+1/2i", "5/13-12/13i"]),
                min_size=1, max_size=6))
def test_disk_count_with_exact_boundary_roots(items):
    roots = [exact(v) for v in items]
    p = Poly.from_roots(roots)
    c = count_disk_roots(p)
    mods = [r.abs2() for r in roots]
    assert c.inside == sum(m < 1 for m in mods)
    assert c.boundary == sum(m == 1 for m in mods)
    assert c.outside == sum(m > 1 for m in mods)


def test_disk_test_agrees_with_brute_force(rng):
    """1000 random polynomials with roots at least 1e-3 away from the unit circle."""
    agree = 0
    for _ in range(1000):
        d = int(rng.integers(1, 9))
        roots = random_roots_off_circle(rng, d)
        p = Poly.from_roots(roots)
        loc = roots_in_closed_unit_disk(p)
        brute = np.all(np.abs(np.roots(p.to_numpy()[::-1])) <= 1)
        agree += (loc.verdict == "AllInside") == bool(brute)
    assert agree == 1000


def _half_plane_to_disk(p, c):
    """``(1-w)^d p(c + (1+w)/(1-w))``: Re x >= c corresponds to |w| <= 1."""
    d = p.degree
    num = Poly([c + 1, 1 - c])
    den = Poly([1, -1])
    out = Poly()
    for m, a in enumerate(p.coeffs):
        out = out + num ** m * den ** (d - m) * a
    return out


def test_half_plane_agrees_with_mobius_disk(rng):
    for _ in range(200):
        d = int(rng.integers(1, 7))
        c = Fraction(int(rng.integers(-3, 4)), 2)
        roots = []
        while len(roots) < d:
            z = gaussian_rational(3 * (rng.random() - 0.5) + 3j * (rng.random() - 0.5))
            if abs(float(z.re) - float(c)) > 1e-3 and abs(complex(z) - (float(c) - 1)) > 1e-3:
                roots.append(z)
        p = Poly.from_roots(roots)
        a = roots_re_at_least(p, c).verdict
        b = roots_in_closed_unit_disk(_half_plane_to_disk(p, c)).verdict
        assert a == b
        assert a == ("AllInside" if all(r.re >= c for r in roots) else "SomeOutside")


def test_half_plane_counts():
    p = Poly.from_roots([ExactComplex(1, 5), -2, ExactComplex(Fraction(1, 2), -1)])
    c = count_half_plane_roots(p, Fraction(1, 2))
    assert (c.inside, c.boundary, c.outside) == (1, 1, 1)


def test_verdict_policies():
    on = Poly.from_roots([1, Fraction(1, 2)])
    assert roots_in_closed_unit_disk(on).verdict == "BoundaryUncertain"
    assert roots_in_closed_unit_disk(on, strict=True).verdict == "SomeOutside"
    out = Poly.from_roots([2, 0])
    loc = roots_in_closed_unit_disk(out)
    assert loc.verdict == "SomeOutside" and abs(loc.witness - 2) < 1e-12
    near = Poly.from_numpy(npp.polyfromroots([1 + 1e-12, 0.1]))
    # exact counting sees the root just outside; the numeric path can only flag it
    assert roots_in_closed_unit_disk(near).verdict == "SomeOutside"
    assert roots_in_closed_unit_disk(near.to_numpy(), exact_count=False).verdict == "BoundaryUncertain"
    assert roots_in_closed_unit_disk(Poly.from_roots([I / 2])).verdict == "AllInside"


# -- real-rootedness and interlacing ------------------------------------------

@given(st.lists(st.integers(-8, 8), min_size=1, max_size=7))
def test_real_root_count_and_rolle_interlacing(ints):
    f = Poly.from_roots(ints)
    assert real_root_count(f) == len(ints)
    assert is_real_rooted(f)
    rep = interlace_and_wronskian(f, f.derivative())
    assert rep.interlacing


def test_real_root_count_with_complex_pair():
    p = Poly.from_roots([1, 2]) * Poly([1, 0, 1])
    assert real_root_count(p) == 2
    assert not is_real_rooted(p)
    with pytest.raises(NonRealCoefficients):
        real_root_count(Poly([I, 1]))


def test_interlacing_examples():
    f = Poly.from_roots([1, 3])
    assert interlace_and_wronskian(f, Poly.from_roots([2])).interlacing
    rep = interlace_and_wronskian(Poly.from_roots([1, 2]), Poly.from_roots([3]))
    assert not rep.interlacing
    assert rep.wronskian == wronskian(Poly.from_roots([1, 2]), Poly.from_roots([3]))
    assert interlace_and_wronskian(Poly([5]), f).interlacing


def test_sign_of_real_poly():
    s = sign_of_real_poly(Poly.from_roots([1, 1]))
    assert s.nonnegative and not s.nonpositive
    s = sign_of_real_poly(Poly.from_roots([1, 2]))
    assert not s.nonnegative and not s.nonpositive
