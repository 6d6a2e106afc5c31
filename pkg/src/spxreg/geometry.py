"""Convex hulls of shapes and their pixel-level area and perimeter.

Hulls are built over the unit-square *corner* points of each shape pixel
and rasterized by pixel-*center* inclusion.  Corner hulls strictly
contain the shape, which keeps solidity <= 1 by construction and avoids
the degenerate case of a thin staircase being its own center-hull.

Corners are integers and centers are half-integers, so every cross
product below is an exact multiple of 0.5 in double precision; the
EPS_ON tolerance only decides ties that are exactly representable, and
no robust-predicate machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import Shape, perimeter_measure
from .errors import DegeneratePolygon, EmptyInput, InternalError

# A point within this cross-product distance of an edge counts as on it
# (and "on" counts as inside for rasterization).
EPS_ON = 1e-9


@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon, vertices in counter-clockwise order
    (mathematical convention: positive cross product points inward)."""

    vertices: tuple[tuple[float, float], ...]

    @property
    def degenerate(self) -> bool:
        return len(self.vertices) < 3

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class HullStats:
    """Pixel-level measurements of a shape's rasterized convex hull."""

    hull_area_px: int
    hull_perimeter: float


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> Polygon:
    """Minimal convex polygon containing all points (monotone chain).

    Collinear inputs yield a degenerate 1- or 2-vertex polygon.
    """
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if not pts:
        raise EmptyInput("convex hull of no points")
    if len(pts) == 1:
        return Polygon((pts[0],))
    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return Polygon((pts[0], pts[-1]))  # all points collinear
    return Polygon(tuple(hull))


def point_in_polygon(p, poly: Polygon) -> str:
    """Classify a point as 'inside', 'on_boundary', or 'outside'."""
    if poly.degenerate:
        raise DegeneratePolygon("cannot classify against a zero-area polygon")
    verts = poly.vertices
    on_edge = False
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        c = _cross(a, b, p)
        if c < -EPS_ON:
            return "outside"
        if abs(c) <= EPS_ON:
            # cross == 0 only means "on the supporting line"; for convex
            # polygons that still implies on the boundary unless some other
            # edge rejects the point, which the loop handles.
            on_edge = True
    return "on_boundary" if on_edge else "inside"


def pixel_corners(shape: Shape) -> np.ndarray:
    """Unique unit-square corner points of the shape's boundary pixels.

    Interior pixels cannot contribute hull vertices, so boundary corners
    are enough.
    """
    xs, ys = shape.bxs, shape.bys
    corners = np.empty((4 * len(xs), 2), dtype=np.int64)
    corners[0::4, 0], corners[0::4, 1] = xs, ys
    corners[1::4, 0], corners[1::4, 1] = xs + 1, ys
    corners[2::4, 0], corners[2::4, 1] = xs, ys + 1
    corners[3::4, 0], corners[3::4, 1] = xs + 1, ys + 1
    return np.unique(corners, axis=0)


def rasterize_hull(poly: Polygon, x0: int, y0: int, w: int, h: int) -> np.ndarray:
    """Mask of pixels in the given box whose center is inside/on the hull."""
    if poly.degenerate:
        raise DegeneratePolygon("cannot rasterize a zero-area polygon")
    vx = np.array([v[0] for v in poly.vertices])
    vy = np.array([v[1] for v in poly.vertices])
    return _kernels.rasterize_convex(vx, vy, x0, y0, w, h, EPS_ON)


def hull_stats(shape: Shape) -> HullStats:
    """Convex-hull pixel area and perimeter length for a shape.

    The hull spans the corner points of every shape pixel; a pixel
    belongs to the rasterized hull iff its center lies inside or on it.
    """
    corners = pixel_corners(shape)
    poly = convex_hull(corners)
    if poly.degenerate:  # four corners per pixel: cannot happen
        raise InternalError("corner hull degenerated")
    x0, y0 = int(shape.xs.min()), int(shape.ys.min())
    w = int(shape.xs.max()) - x0 + 1
    h = int(shape.ys.max()) - y0 + 1
    raster = rasterize_hull(poly, x0, y0, w, h).astype(bool)

    smask, _, _ = shape.mask()
    if not raster[smask.astype(bool)].all():
        raise InternalError("rasterized hull does not contain the shape")
    area = int(raster.sum())
    return HullStats(area, perimeter_measure(raster))
