"""Point clouds and their file formats (CSV, SVG scatter, JSON metadata)."""

import json
from dataclasses import dataclass, field

import numpy as np


@dataclass
class PointCloud:
    """Complex points plus free-form metadata.

    ``tags`` is an optional integer label per point (chain index for sampler
    output, eigenpolynomial degree for eigenroot clouds).
    """

    points: np.ndarray
    metadata: dict = field(default_factory=dict)
    tags: np.ndarray | None = None

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=complex).ravel()
        if self.tags is not None:
            self.tags = np.asarray(self.tags, dtype=np.int64).ravel()
            if self.tags.shape != self.points.shape:
                raise ValueError("tags must match points")

    def __len__(self):
        return len(self.points)

    def chain(self, c):
        """Points produced by chain (or tag) ``c``, in generation order."""
        if self.tags is None:
            raise ValueError("cloud carries no tags")
        return self.points[self.tags == c]

    def bounding_box(self):
        re, im = self.points.real, self.points.imag
        return float(re.min()), float(re.max()), float(im.min()), float(im.max())


def write_csv(cloud, path):
    pts = cloud.points if isinstance(cloud, PointCloud) else np.asarray(cloud, dtype=complex)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("re,im\n")
        for z in pts:
            fh.write(f"{z.real:.17g},{z.imag:.17g}\n")


def read_csv(path):
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.size == 0:
        return np.zeros(0, dtype=complex)
    return data[:, 0] + 1j * data[:, 1]


def svg_scatter(points, width=800, height=800, color="#1f3b73"):
    """Static SVG 1.1 scatter; viewport is the bounding box plus a 5% margin."""
    pts = np.asarray(points, dtype=complex)
    if pts.size == 0:
        x0, x1, y0, y1 = -1.0, 1.0, -1.0, 1.0
    else:
        x0, x1 = pts.real.min(), pts.real.max()
        y0, y1 = pts.imag.min(), pts.imag.max()
    span = max(x1 - x0, y1 - y0, 1e-12)
    x0, x1 = x0 - 0.05 * span, x1 + 0.05 * span
    y0, y1 = y0 - 0.05 * span, y1 + 0.05 * span
    # dense clouds get smaller dots
    radius = max(0.3, min(3.0, 60.0 / np.sqrt(max(pts.size, 1))))
    sx = width / (x1 - x0)
    sy = height / (y1 - y0)
    s = min(sx, sy)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<g fill="{color}" fill-opacity="0.6">',
    ]
    for z in pts:
        cx = (z.real - x0) * s
        cy = height - (z.imag - y0) * s
        lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{radius:.2f}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def write_svg(cloud, path, **kw):
    pts = cloud.points if isinstance(cloud, PointCloud) else cloud
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_scatter(pts, **kw))


def write_metadata(cloud, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cloud.metadata, fh, indent=2)
        fh.write("\n")
