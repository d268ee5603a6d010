"""Chaos-game sampling of minimal Hutchinson-invariant sets.

Each chain starts at ``z0`` and repeatedly replaces the current point ``z``
by a uniformly chosen root of ``psi(x, z, n)``. Three ways of choosing the
exponent are supported: a fixed integer, a uniform draw from an interval at
every step, and a two-point variant that mixes two points of a reservoir of
visited points.
"""

import cmath
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .cloud import PointCloud
from .diffop import DiffOp, PsiTable, as_diffop
from .errors import DegenerateOperator, DegenerateStep, NonFinite
from .invariance import NotFoundBelow
from .roots import find_roots
from .scalar import falling_factorial

BLOWUP = 1e12
TRIM = 1e-13


@dataclass(frozen=True)
class Integer:
    n: int


@dataclass(frozen=True)
class ContinuousUniform:
    n_min: float
    n_max: float


@dataclass(frozen=True)
class TwoPoint:
    n1: float
    n2: float


@dataclass(frozen=True)
class SamplerConfig:
    steps: int = 100_000
    burn_in: int = 100
    chains: int = 4
    seed: int = 0
    mode: object = field(default_factory=lambda: Integer(1))
    include_trivial: bool = False
    reservoir: int = 10_000
    workers: int | None = None

    def __post_init__(self):
        if not (self.steps > self.burn_in >= 0):
            raise ValueError("need steps > burn_in >= 0")
        if self.chains < 1:
            raise ValueError("need at least one chain")
        if isinstance(self.mode, ContinuousUniform) and not 0 <= self.mode.n_min <= self.mode.n_max:
            raise ValueError("need 0 <= n_min <= n_max")
        if isinstance(self.mode, TwoPoint) and min(self.mode.n1, self.mode.n2) < 0:
            raise ValueError("need n1, n2 >= 0")

    def mode_json(self):
        m = self.mode
        if isinstance(m, Integer):
            return {"mode": "Integer", "n": m.n}
        if isinstance(m, ContinuousUniform):
            return {"mode": "ContinuousUniform", "n_min": m.n_min, "n_max": m.n_max}
        return {"mode": "TwoPoint", "n1": m.n1, "n2": m.n2}


# ---------------------------------------------------------------------------
# root selection

def _solve(c, z):
    """Roots of the coefficient list ``c`` (constant first) after trimming."""
    scale = max(abs(a) for a in c)
    if scale == 0:
        raise DegenerateStep(z)
    d = len(c) - 1
    while abs(c[d]) <= TRIM * scale:
        d -= 1
    if d == 0:
        raise DegenerateStep(z)
    if d == 1:
        return [-c[0] / c[1]]
    if d == 2:
        a0, a1, a2 = c[0], c[1], c[2]
        disc = cmath.sqrt(a1 * a1 - 4 * a2 * a0)
        if (a1.conjugate() * disc).real < 0:
            disc = -disc
        q = -(a1 + disc) / 2
        if q == 0:
            return [0j, 0j]
        return [q / a2, a0 / q]
    return list(find_roots(np.asarray(c[: d + 1], dtype=complex)))


def _pick(roots, u, z):
    r = roots[min(int(u * len(roots)), len(roots) - 1)]
    if not (abs(r) <= BLOWUP):
        raise NonFinite(f"root of modulus {abs(r):.3g} exceeds {BLOWUP:g} (from z = {z!r})")
    return r


def _weighted(table, n):
    """psi coefficient matrix ``[a][b]`` (coefficient of x^a t^b) for exponent ``n``."""
    w = np.einsum("j,jab->ab", table.falling(n), table.table)
    return w.tolist()


def _eval(mat, z):
    tp = [1.0 + 0j]
    for _ in range(len(mat[0]) - 1):
        tp.append(tp[-1] * z)
    return [sum(r * p for r, p in zip(row, tp)) for row in mat]


def _chain_single(T, cfg, z0, child):
    table = PsiTable(T)
    k = table.order
    rng_n, rng_root = (np.random.default_rng(s) for s in child.spawn(2))
    mode = cfg.mode
    if isinstance(mode, Integer):
        mat = _weighted(table, float(mode.n))
        ns = None
        trivial = mode.n - k if cfg.include_trivial and mode.n > k else 0
    else:
        ns = rng_n.uniform(mode.n_min, mode.n_max, cfg.steps)
        trivial = 0
    us = rng_root.random(cfg.steps)
    out = np.empty(cfg.steps - cfg.burn_in, dtype=complex)
    z = complex(z0)
    for s in range(cfg.steps):
        if ns is not None:
            mat = _weighted(table, float(ns[s]))
        roots = _solve(_eval(mat, z), z)
        if trivial:
            roots = roots + [z] * trivial
        z = _pick(roots, us[s], z)
        if s >= cfg.burn_in:
            out[s - cfg.burn_in] = z
    return out


def _two_point_tensor(T, n1, n2):
    """``tab[a, b, c]``: coefficient of ``x^a t1^b t2^c`` in the two-point polynomial."""
    k = T.order
    deg = max(q.degree + 2 * k - j for j, q in enumerate(T.coeffs) if q)
    tab = np.zeros((deg + 1, k + 1, k + 1), dtype=complex)
    for j, q in enumerate(T.coeffs):
        if not q:
            continue
        qc = q.to_numpy()
        for i in range(j + 1):
            w = comb(j, i) * falling_factorial(float(n1), i) * falling_factorial(float(n2), j - i)
            if w == 0:
                continue
            m1, m2 = k - i, k - j + i
            for b in range(m1 + 1):
                for c in range(m2 + 1):
                    coef = w * comb(m1, b) * comb(m2, c) * (-1) ** (b + c)
                    a = m1 - b + m2 - c
                    tab[a: a + len(qc), b, c] += coef * qc
    return tab


def _chain_two_point(T, cfg, z0, child):
    mode = cfg.mode
    tab = _two_point_tensor(T, mode.n1, mode.n2)
    k = T.order
    rng_pick, rng_root = (np.random.default_rng(s) for s in child.spawn(2))
    cap = cfg.reservoir
    ring = np.empty(cap, dtype=complex)
    ring[0] = complex(z0)
    size, head = 1, 1
    us = rng_root.random(cfg.steps)
    out = np.empty(cfg.steps - cfg.burn_in, dtype=complex)
    pw = np.arange(k + 1)
    for s in range(cfg.steps):
        i1, i2 = rng_pick.integers(size, size=2)
        t1, t2 = ring[i1], ring[i2]
        c = np.einsum("abc,b,c->a", tab, t1 ** pw, t2 ** pw).tolist()
        z = _pick(_solve(c, t1), us[s], t1)
        ring[head % cap] = z
        head += 1
        size = min(size + 1, cap)
        if s >= cfg.burn_in:
            out[s - cfg.burn_in] = z
    return out


def _run_chain(op_json, cfg, z0, child):
    T = DiffOp.from_json(op_json)
    if isinstance(cfg.mode, TwoPoint):
        return _chain_two_point(T, cfg, z0, child)
    return _chain_single(T, cfg, z0, child)


def _worker_count(cfg):
    cap = os.environ.get("INVKIT_THREADS")
    n = cfg.workers if cfg.workers is not None else (os.cpu_count() or 1)
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, min(n, cfg.chains))


def _sample(T, cfg, z0):
    T = as_diffop(T)
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.chains)
    op_json = T.to_json()
    workers = _worker_count(cfg)
    if workers == 1:
        parts = [_run_chain(op_json, cfg, z0, ch) for ch in children]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_run_chain, op_json, cfg, z0, ch) for ch in children]
            parts = [f.result() for f in futs]
    per = cfg.steps - cfg.burn_in
    meta = {
        "seed": cfg.seed,
        "steps": cfg.steps,
        "burn_in": cfg.burn_in,
        "chains": cfg.chains,
        "operator": str(T),
        "z0": [complex(z0).real, complex(z0).imag],
        "include_trivial": cfg.include_trivial,
        **cfg.mode_json(),
    }
    if isinstance(cfg.mode, TwoPoint):
        meta["reservoir"] = cfg.reservoir
    tags = np.repeat(np.arange(cfg.chains), per)
    return PointCloud(np.concatenate(parts), meta, tags)


def chaos_game(T, cfg, z0=0j):
    """Integer-exponent chaos game; ``cfg.mode`` must be ``Integer``."""
    if not isinstance(cfg.mode, Integer):
        raise ValueError("chaos_game expects an Integer mode")
    return _sample(T, cfg, z0)


def chaos_game_continuous(T, cfg, z0=0j):
    """Chaos game drawing a fresh exponent uniformly from ``[n_min, n_max]`` each step."""
    if not isinstance(cfg.mode, ContinuousUniform):
        raise ValueError("chaos_game_continuous expects a ContinuousUniform mode")
    return _sample(T, cfg, z0)


def chaos_game_two_point(T, cfg, z0=0j):
    """Reservoir chaos game on the two-point polynomial."""
    if not isinstance(cfg.mode, TwoPoint):
        raise ValueError("chaos_game_two_point expects a TwoPoint mode")
    return _sample(T, cfg, z0)


# ---------------------------------------------------------------------------
# degree bound

def t_sample(R, count=100, seed=0):
    """Half the points just inside the circle of radius ``R``, half uniform in the disk."""
    rng = np.random.default_rng(seed)
    half = count // 2
    rim = R * (1 - 1e-9) * np.exp(2j * np.pi * rng.random(half))
    rad = R * np.sqrt(rng.random(count - half))
    inner = rad * np.exp(2j * np.pi * rng.random(count - half))
    return np.concatenate([rim, inner])


def roots_near_leading(T, n, ts, delta, table=None):
    """True when every root of ``psi(., t, n)`` lies within ``delta`` of a root of Q_k, for all ``t``."""
    T = as_diffop(T)
    table = table or PsiTable(T)
    anchors = find_roots(T.leading)
    mat = _weighted(table, float(n))
    for t in ts:
        rs = np.asarray(_solve(_eval(mat, complex(t)), t))
        d = np.min(np.abs(rs[:, None] - anchors[None, :]), axis=1)
        if np.any(d > delta):
            return False
    return True


def degree_for_delta(T, R, delta, n_cap=10_000, seed=0):
    """Smallest ``n`` (doubling then bisection from the order) with roots of psi within ``delta`` of Q_k.

    Returns ``NotFoundBelow(n_cap)`` when no tested ``n <= n_cap`` works.
    """
    T = as_diffop(T)
    if not T.is_nondegenerate() or T.leading.degree < 1:
        raise DegenerateOperator("needs a non-degenerate operator with non-constant leading coefficient")
    ts = t_sample(R, seed=seed)
    table = PsiTable(T)

    def ok(n):
        return roots_near_leading(T, n, ts, delta, table)

    k = T.order
    if ok(k):
        return k
    lo, hi = k, max(2 * k, 1)
    while not ok(hi):
        if hi >= n_cap:
            return NotFoundBelow(n_cap)
        lo, hi = hi, min(2 * hi, n_cap)
    # ok(hi) holds and ok(lo) fails
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi
