"""Julia set of z -> z^2 + i as an invariant set of a first-order operator.

For T = (x^2 - x + i) D + 1 and n = 1 the image of (x - t) is x^2 + i - t,
so each chaos-game step picks one of the two square roots of t - i. These
are the inverse branches of z -> z^2 + i, whose attractor is the Julia set.

    python3 demos/julia_cloud.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from invkit import Integer, SamplerConfig, chaos_game
from invkit.cloud import write_csv, write_svg
from invkit.geometry import hausdorff_distance

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

T = "(x^2-x+1i) D1 + 1"
cfg = SamplerConfig(steps=100_000, seed=7, mode=Integer(1))
cloud = chaos_game(T, cfg)
print(f"{len(cloud)} points from {cfg.chains} chains")

# every step undoes one application of z -> z^2 + i
z = cloud.chain(0)
print("max |z_next^2 + i - z| =", np.max(np.abs(z[1:] ** 2 + 1j - z[:-1])))
print("max |z| =", np.max(np.abs(cloud.points)))

# backward iteration contracts, so the starting point is forgotten
other = chaos_game(T, cfg, z0=0.3 + 0.1j)
print("Hausdorff distance to the run from z0 = 0.3+0.1i:", hausdorff_distance(cloud.points, other.points))

# forward orbits of sampled points stay bounded
w = cloud.points.copy()
for _ in range(20):
    w = w * w + 1j
print("max |f^20(z)| =", np.max(np.abs(w)))

write_csv(cloud, out / "julia.csv")
write_svg(cloud.points[::4], out / "julia.svg")
print("wrote", out / "julia.csv", "and", out / "julia.svg")
