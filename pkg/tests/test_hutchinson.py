import math
import pickle

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import JULIA, LEVY
from invkit.diffop import DiffOp, phi_two_point, psi
from invkit.errors import DegenerateOperator, DegenerateStep, EigenvalueCollision
from invkit.geometry import convex_hull, distance_to_hull
from invkit.hutchinson import (ContinuousUniform, Integer, SamplerConfig, TwoPoint,
                               _two_point_tensor, chaos_game, chaos_game_continuous,
                               chaos_game_two_point, degree_for_delta, roots_near_leading,
                               t_sample)
from invkit.invariance import NotFoundBelow

npp = np.polynomial.polynomial


def small(mode, **kw):
    return SamplerConfig(**{"steps": 2000, "burn_in": 50, "chains": 2, "mode": mode, **kw})


# -- configuration --------------------------------------------------------------

@pytest.mark.parametrize("kw", [
    {"steps": 10, "burn_in": 10},
    {"chains": 0},
    {"mode": ContinuousUniform(3, 2)},
    {"mode": TwoPoint(-1, 2)},
])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SamplerConfig(**kw)


def test_mode_mismatch():
    with pytest.raises(ValueError):
        chaos_game(JULIA, small(ContinuousUniform(1, 2)))
    with pytest.raises(ValueError):
        chaos_game_two_point(JULIA, small(Integer(1)))


# -- reproducibility --------------------------------------------------------------

def test_same_seed_same_cloud():
    a = chaos_game(JULIA, small(Integer(1), seed=7))
    b = chaos_game(JULIA, small(Integer(1), seed=7))
    c = chaos_game(JULIA, small(Integer(1), seed=8))
    assert np.array_equal(a.points, b.points)
    assert not np.array_equal(a.points, c.points)
    assert a.metadata == b.metadata
    assert len(a) == 2 * 1950
    assert np.array_equal(a.tags, np.repeat([0, 1], 1950))


def test_worker_count_does_not_change_output():
    a = chaos_game(LEVY, small(Integer(2), workers=1))
    b = chaos_game(LEVY, small(Integer(2), workers=2))
    assert np.array_equal(a.points, b.points)


def test_degenerate_interval_reproduces_integer_mode():
    a = chaos_game(LEVY, small(Integer(2), seed=3))
    b = chaos_game_continuous(LEVY, small(ContinuousUniform(2, 2), seed=3))
    assert np.array_equal(a.points, b.points)


def test_metadata_fields():
    meta = chaos_game_two_point(LEVY, small(TwoPoint(2, 3), reservoir=64)).metadata
    for key in ("seed", "steps", "burn_in", "chains", "operator", "z0", "mode", "n1", "n2", "reservoir"):
        assert key in meta
    assert meta["mode"] == "TwoPoint"


# -- orbit relations ----------------------------------------------------------------

def test_julia_orbit_relation():
    cloud = chaos_game(JULIA, small(Integer(1)))
    for c in range(2):
        p = cloud.chain(c)
        # psi = x^2 + i - t, so every step inverts z -> z^2 + i
        assert np.max(np.abs(p[1:] ** 2 + 1j - p[:-1])) < 1e-12


def test_julia_points_have_bounded_forward_orbits():
    z = chaos_game(JULIA, small(Integer(1))).points.copy()
    for _ in range(20):
        z = z * z + 1j
    assert np.all(np.abs(z) < 2)


@pytest.mark.parametrize("text, n", [(LEVY, 2), ("x^2 D1 + (x-1)", 1), ("(x^3+2x) D3 + x D2 + 1", 4)])
def test_every_step_is_a_root_of_psi(text, n):
    T = DiffOp.parse(text)
    cloud = chaos_game(T, small(Integer(n), steps=600, chains=1))
    p = cloud.points
    for t, z in zip(p[:-1], p[1:]):
        c = psi(T, t, n)
        scale = np.sum(np.abs(c) * np.abs(z) ** np.arange(len(c)))
        assert abs(npp.polyval(z, c)) <= 1e-10 * scale


def test_continuous_steps_use_exponents_in_range():
    T = DiffOp.parse("x^2 D1 + (x-1)")
    cloud = chaos_game_continuous(T, small(ContinuousUniform(1, 3), chains=1, steps=400))
    p = cloud.points
    # psi = n x^2 + (x - 1)(x - t) is linear in n: recover n from each step
    ns = -((p[1:] - 1) * (p[1:] - p[:-1])) / p[1:] ** 2
    assert np.max(np.abs(ns.imag)) < 1e-8
    assert np.all((ns.real > 1 - 1e-8) & (ns.real < 3 + 1e-8))
    assert ns.real.max() - ns.real.min() > 1


def test_fixed_point_chain():
    # psi = x^2 - t has the double root 0 at t = 0
    cloud = chaos_game("x(x-1) D1 + 1", small(Integer(1)))
    assert np.all(cloud.points == 0)


def test_degenerate_step():
    with pytest.raises(DegenerateStep) as info:
        chaos_game("D1", small(Integer(1)))
    assert pickle.loads(pickle.dumps(info.value)).z == info.value.z


def test_include_trivial_keeps_some_points_fixed():
    cfg = small(Integer(3), include_trivial=True, chains=1)
    p = chaos_game(JULIA, cfg).points
    stays = np.mean(p[1:] == p[:-1])
    # two of four candidate roots are the current point
    assert 0.4 < stays < 0.6
    assert chaos_game(JULIA, cfg).metadata["include_trivial"] is True


def test_errors_survive_pickling():
    err = EigenvalueCollision(3, "lambda_3 = lambda_5")
    back = pickle.loads(pickle.dumps(err))
    assert back.index == 3 and str(back) == str(err)


# -- two-point variant ----------------------------------------------------------------

@given(st.floats(0, 4), st.floats(0, 4),
       st.complex_numbers(max_magnitude=3), st.complex_numbers(max_magnitude=3))
def test_two_point_tensor_matches_direct_polynomial(n1, n2, t1, t2):
    T = DiffOp.parse(LEVY)
    tab = _two_point_tensor(T, n1, n2)
    pw = np.arange(T.order + 1)
    got = np.einsum("abc,b,c->a", tab, t1 ** pw, t2 ** pw)
    want = phi_two_point(T, t1, n1, t2, n2)
    m = max(len(got), len(want))
    got, want = np.pad(got, (0, m - len(got))), np.pad(want, (0, m - len(want)))
    assert np.allclose(got, want, atol=1e-8 * max(1, np.max(np.abs(want))))


def test_midpoint_map():
    # for T = D with n1 = n2 = 1 the reduced polynomial is 2x - t1 - t2
    T = DiffOp.parse("D1")
    tab = _two_point_tensor(T, 1, 1)
    pw = np.arange(2)
    c = np.einsum("abc,b,c->a", tab, (1 + 2j) ** pw, (3 - 1j) ** pw)
    assert abs(-c[0] / c[1] - (2 + 0.5j)) < 1e-14


def test_levy_two_point_cloud_stays_near_the_integer_attractor():
    base = chaos_game(LEVY, SamplerConfig(steps=20_000, burn_in=100, chains=2, mode=Integer(2)))
    hull = convex_hull(base.points)
    two = chaos_game_two_point(LEVY, SamplerConfig(steps=8000, burn_in=500, chains=2,
                                                   mode=TwoPoint(2, 2), reservoir=2000))
    assert np.max(distance_to_hull(two.points, hull)) <= 0.05


# -- degree bound ----------------------------------------------------------------

def test_degree_for_delta_matches_closed_form():
    # psi for x D + 1 has the single root t / (n + 1)
    ts = t_sample(1.0)
    want = math.ceil(np.max(np.abs(ts)) / 0.01) - 1
    assert degree_for_delta("x D1 + 1", 1.0, 0.01) == want
    assert roots_near_leading("x D1 + 1", want, ts, 0.01)
    assert not roots_near_leading("x D1 + 1", want - 1, ts, 0.01)


def test_degree_for_delta_edge_cases():
    assert degree_for_delta("x D1 + 1", 1.0, 10.0) == 1
    assert degree_for_delta("x D1 + 1", 1.0, 1e-6, n_cap=64) == NotFoundBelow(64)
    with pytest.raises(DegenerateOperator):
        degree_for_delta("D1 + x", 1.0, 0.1)
    with pytest.raises(DegenerateOperator):
        degree_for_delta("(x+1) D3 + x^4 D2 + 2x", 1.0, 0.1)
