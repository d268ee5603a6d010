"""Levy C curve from a second-order operator.

For T = x(x+1) D^2 + i D + 2 the image of (x - t)^2 factors into two linear
terms, giving the contractions t -> (1+i)t/2 and t -> (1-i)(t-i)/2. The
chaos game therefore draws the Levy C curve. The two-point variant mixes
two visited points per step and lands on a set close to the same curve.

    python3 demos/levy_curve.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from invkit import Integer, SamplerConfig, TwoPoint, chaos_game, chaos_game_two_point
from invkit.cloud import write_csv, write_svg
from invkit.geometry import convex_hull, distance_to_hull

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

T = "(x^2+x) D2 + 1i D1 + 2"
cloud = chaos_game(T, SamplerConfig(steps=100_000, seed=3, mode=Integer(2)))

z = cloud.chain(0)
t, nxt = z[:-1], z[1:]
left = np.abs(nxt - (1 + 1j) / 2 * t) < 1e-10
right = np.abs(nxt - (1 - 1j) / 2 * (t - 1j)) < 1e-10
print(f"steps explained by the two maps: {np.mean(left | right):.6f}")
print(f"share of the first map: {np.mean(left):.3f}")
print("bounding box:", cloud.bounding_box())

two = chaos_game_two_point(T, SamplerConfig(steps=20_000, burn_in=500, chains=2,
                                            mode=TwoPoint(2, 2), reservoir=2000))
gap = np.max(distance_to_hull(two.points, convex_hull(cloud.points)))
print(f"two-point cloud: farthest point is {gap:.3g} outside the hull of the curve")

write_csv(cloud, out / "levy.csv")
write_svg(cloud.points[::4], out / "levy.svg")
write_svg(two, out / "levy_two_point.svg", color="#8a2b0e")
print("wrote levy.csv, levy.svg, levy_two_point.svg to", out)
