"""Continuous exponents: sets bounded by cochleoid-type curves.

Drawing the exponent n uniformly from [0, 50] at every step, the cloud for
T = x^2 D + (x - 1) fills the region r <= sin(theta)/theta, and the cloud for
T = x^3 D + (x + 1)(x - 1) fills r^2 <= sin(2 theta)/(2 theta).

    python3 demos/cochleoid.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from invkit import ContinuousUniform, SamplerConfig, chaos_game_continuous
from invkit.cloud import write_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)
cfg = SamplerConfig(steps=25_100, burn_in=100, seed=0, mode=ContinuousUniform(0, 50))


def radial_excess(points, bound):
    """Largest amount by which |z| exceeds the polar bound at arg z."""
    phi = np.angle(points)
    return float(np.max(np.abs(points) - bound(phi)))


def sinc(u):
    return np.sinc(u / np.pi)


for name, T, bound in [
    ("cochleoid", "x^2 D1 + (x-1)", sinc),
    # symmetric under z -> -z: the curve gives one lobe, reduce the angle mod pi
    ("cochleoid_cubic", "x^3 D1 + (x+1)(x-1)", lambda p: np.sqrt(sinc(2 * (p - np.pi * np.round(p / np.pi))))),
]:
    cloud = chaos_game_continuous(T, cfg)
    print(f"{T}: {len(cloud)} points, bounding box {np.round(cloud.bounding_box(), 3)}")
    print(f"  largest radial excess over the boundary curve: {radial_excess(cloud.points, bound):.3g}")
    write_svg(cloud.points[::2], out / f"{name}.svg")
print("wrote SVG scatters to", out)
