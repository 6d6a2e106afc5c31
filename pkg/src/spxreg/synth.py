"""Deterministic generators: benchmark shapes, boundary noise, grids,
and variance-driven quadtree partitions.

Every generator is a pure function of its arguments; randomness only
enters through an explicit seed driving a counter-based (Philox) bit
generator, so outputs are reproducible and safe to generate in parallel.

Shape definitions at size p (R = p/2, all rasterized by pixel-center
inclusion, centered on a canvas with a 2-pixel margin):

* Square    p x p axis-aligned block
* Circle    disk of radius R
* Hexagon   regular hexagon, circumradius R, flat top edge
* Ellipse   axis-aligned, semi-axes R x R/2
* Cross     plus sign spanning p x p, arm width p/3
* Bean      disk of radius 0.92R with a bite removed: the interior of a
            disk of radius 0.62R centered 0.88R above the main center
* W         trapezoid glyph (top width p, bottom width 0.6p, height 1.2p)
            with two V-notches of depth 0.95 height and top half-width
            0.105p cut downward from the top at x = +-0.21p
* Split     two disks of radius 0.17p centered 0.31p left/right of the
            middle, joined by a thin bridge (height max(1, 0.03p) pixels)
* U         ring with outer radius R, inner radius max-width limited to
            0.72R, with a 70-degree wedge opening removed upward
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import ceil, pi, sqrt

import numpy as np

from . import _kernels
from .core import LabelMap, Shape, shape_from_mask
from .errors import (InternalError, NonPowerOfTwoSide, NonSquareImage,
                     ShapeVanished, SizeTooSmall)

_MARGIN = 2


class ShapeKind(Enum):
    SQUARE = "square"
    CIRCLE = "circle"
    HEXAGON = "hexagon"
    ELLIPSE = "ellipse"
    CROSS = "cross"
    BEAN = "bean"
    W = "w"
    SPLIT = "split"
    U = "u"


REGULAR = (ShapeKind.SQUARE, ShapeKind.CIRCLE, ShapeKind.HEXAGON)
STANDARD = (ShapeKind.ELLIPSE, ShapeKind.CROSS, ShapeKind.BEAN)
IRREGULAR = (ShapeKind.W, ShapeKind.SPLIT, ShapeKind.U)


@dataclass(frozen=True)
class NoiseSpec:
    """Boundary flip noise: per round, each exterior pixel touching the
    shape is added with probability ``amplitude`` and each boundary pixel
    removed with the same probability."""

    amplitude: float
    rounds: int = 1
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.amplitude <= 1.0:
            raise ValueError("amplitude must be in [0, 1]")
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def _center_grid(side: int):
    """Pixel-center coordinates relative to the canvas center."""
    c = side / 2.0
    u = np.arange(side) + 0.5 - c
    return np.meshgrid(u, u)  # (vx, vy) with vy varying along rows


def make_shape(kind: ShapeKind, size: int) -> Shape:
    """Rasterize one benchmark shape at the given pixel size."""
    if size < 8:
        raise SizeTooSmall(f"shape size must be >= 8, got {size}")
    p = size
    R = p / 2.0
    # W is taller than wide; its canvas needs the extra rows
    tall = int(np.ceil(1.2 * p))
    tall += (tall ^ p) & 1  # keep canvas parity equal to p
    side = (tall if kind is ShapeKind.W else p) + 2 * _MARGIN
    X, Y = _center_grid(side)

    if kind is ShapeKind.SQUARE:
        mask = (np.abs(X) < R) & (np.abs(Y) < R)
    elif kind is ShapeKind.CIRCLE:
        mask = X * X + Y * Y <= R * R
    elif kind is ShapeKind.HEXAGON:
        h = R * sqrt(3.0) / 2.0
        mask = ((np.abs(Y) <= h)
                & (np.abs(sqrt(3.0) * X + Y) <= sqrt(3.0) * R)
                & (np.abs(sqrt(3.0) * X - Y) <= sqrt(3.0) * R))
    elif kind is ShapeKind.ELLIPSE:
        mask = (X / R) ** 2 + (Y / (R / 2.0)) ** 2 <= 1.0
    elif kind is ShapeKind.CROSS:
        w = p / 3.0
        mask = (((np.abs(X) < R) & (np.abs(Y) <= w / 2.0))
                | ((np.abs(Y) < R) & (np.abs(X) <= w / 2.0)))
    elif kind is ShapeKind.BEAN:
        rm = 0.92 * R
        mask = ((X * X + Y * Y <= rm * rm)
                & ((X * X + (Y + 0.88 * R) ** 2) > (0.62 * R) ** 2))
    elif kind is ShapeKind.W:
        # Solid glyph: a trapezoid with two deep V-notches from the top
        # (y grows downward, so the top is -hh).
        h = 1.2 * p
        hh = h / 2.0
        top_half, bottom_half = 0.5 * p, 0.30 * p
        mask = ((np.abs(Y) < hh)
                & (np.abs(X) <= top_half + (bottom_half - top_half) * (Y + hh) / h))
        for xc in (-0.21 * p, 0.21 * p):
            depth, half_w = min(0.95 * h, h - 3.0), 0.105 * p
            tip_y = -hh + depth
            notch = (Y < tip_y) & (np.abs(X - xc) < half_w * (tip_y - Y) / depth)
            mask &= ~notch
    elif kind is ShapeKind.SPLIT:
        r = 0.17 * p
        d = 0.31 * p
        lobes = (((X - d) ** 2 + Y * Y <= r * r)
                 | ((X + d) ** 2 + Y * Y <= r * r))
        # bridge thickness grows with size so boundary noise cannot sever it
        bridge = (np.abs(Y) <= max(0.5, 0.015 * p)) & (np.abs(X) <= d)
        mask = lobes | bridge
    elif kind is ShapeKind.U:
        inner = min(0.72 * R, R - 1.6)
        rho2 = X * X + Y * Y
        theta = np.arctan2(-Y, X)  # y up, so the gap opens upward
        gap = np.abs(theta - pi / 2.0) <= (35.0 * pi / 180.0)
        mask = (rho2 <= R * R) & (rho2 >= inner * inner) & ~gap
    else:
        raise ValueError(f"unknown shape kind {kind}")

    if not mask.any():
        raise ShapeVanished(f"{kind.value} at size {size} rasterized empty")
    comp, n = _kernels.label_components(mask.astype(np.int64))
    fg = np.unique(comp[mask])
    if len(fg) != 1:  # the parametric definitions guarantee connectivity
        raise InternalError(f"{kind.value} at size {size} rasterized disconnected")
    return shape_from_mask(mask.astype(np.uint8))


def _largest_component(mask: np.ndarray) -> np.ndarray:
    comp, n = _kernels.label_components(mask.astype(np.int64))
    best, best_area = None, -1
    for c in range(n):
        region = comp == c
        if not mask[region].any():
            continue
        area = int(region.sum())
        if area > best_area:
            best, best_area = region, area
    return best


def _fill_holes(mask: np.ndarray) -> np.ndarray:
    padded = np.zeros((mask.shape[0] + 2, mask.shape[1] + 2), dtype=bool)
    padded[1:-1, 1:-1] = mask
    comp, n = _kernels.label_components((~padded).astype(np.int64), connectivity=8)
    exterior = comp[0, 0]
    filled = padded | (comp != exterior)
    return filled[1:-1, 1:-1]


def perturb_boundary(shape: Shape, spec: NoiseSpec) -> Shape:
    """Apply seeded flip noise to a shape's boundary.

    After the rounds, the largest 4-connected component is kept and fully
    enclosed holes are filled, so the result is again a valid shape.
    """
    rng = _rng(spec.seed)
    pad = spec.rounds + 1
    m0, x0, y0 = shape.mask()
    mask = np.zeros((m0.shape[0] + 2 * pad, m0.shape[1] + 2 * pad), dtype=bool)
    mask[pad:-pad, pad:-pad] = m0.astype(bool)

    for _ in range(spec.rounds):
        grow = np.zeros_like(mask)
        grow[1:, :] |= mask[:-1, :]
        grow[:-1, :] |= mask[1:, :]
        grow[:, 1:] |= mask[:, :-1]
        grow[:, :-1] |= mask[:, 1:]
        addable = grow & ~mask
        removable = mask & ~_erode4(mask)
        add_idx = np.flatnonzero(addable.ravel())
        rem_idx = np.flatnonzero(removable.ravel())
        flat = mask.ravel()
        flat[add_idx[rng.random(add_idx.size) < spec.amplitude]] = True
        flat[rem_idx[rng.random(rem_idx.size) < spec.amplitude]] = False

    if not mask.any():
        raise ShapeVanished("noise removed every pixel")
    mask = _largest_component(mask)
    mask = _fill_holes(mask)
    return shape_from_mask(mask.astype(np.uint8),
                           label=shape.label,
                           origin=(x0 - pad, y0 - pad))


def _erode4(mask: np.ndarray) -> np.ndarray:
    er = np.zeros_like(mask)
    er[1:-1, 1:-1] = (mask[1:-1, 1:-1] & mask[:-2, 1:-1] & mask[2:, 1:-1]
                      & mask[1:-1, :-2] & mask[1:-1, 2:])
    return er


def square_grid(width: int, height: int, k: int) -> LabelMap:
    """Near-uniform rectangular tiling targeting k blocks."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = sqrt(width * height / k)
    nx = max(1, round(width / s))
    ny = max(1, round(height / s))
    x_edges = [round(i * width / nx) for i in range(nx + 1)]
    y_edges = [round(j * height / ny) for j in range(ny + 1)]
    labels = np.empty((height, width), dtype=np.int64)
    for j in range(ny):
        for i in range(nx):
            labels[y_edges[j]:y_edges[j + 1], x_edges[i]:x_edges[i + 1]] = j * nx + i
    return LabelMap(labels)


def hex_grid(width: int, height: int, k: int) -> LabelMap:
    """Hexagonal tiling by nearest-center assignment.

    Interior cells are regular (pointy-top) hexagons; cells along the
    border are clipped by the image edge.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a = sqrt(2.0 * width * height / (k * 3.0 * sqrt(3.0)))  # hex side
    dx = sqrt(3.0) * a
    dy = 1.5 * a
    ncols = int(ceil(width / dx)) + 2
    nrows = int(ceil(height / dy)) + 2
    cx = np.empty((nrows, ncols))
    cy = np.empty((nrows, ncols))
    for r in range(nrows):
        off = 0.5 * dx if (r % 2) else 0.0
        cx[r] = (np.arange(ncols) - 0.5) * dx + off
        cy[r] = (r - 0.5) * dy
    px = np.arange(width) + 0.5
    py = np.arange(height) + 0.5
    PX, PY = np.meshgrid(px, py)

    best_d2 = np.full((height, width), np.inf)
    best_id = np.zeros((height, width), dtype=np.int64)
    row_guess = np.clip(np.round(PY / dy + 0.5).astype(np.int64), 0, nrows - 1)
    for dr in (-1, 0, 1):
        rr = np.clip(row_guess + dr, 0, nrows - 1)
        off = np.where(rr % 2 == 1, 0.5 * dx, 0.0)
        col_guess = np.round((PX - off) / dx + 0.5).astype(np.int64)
        for dc in (-1, 0, 1):
            cc = np.clip(col_guess + dc, 0, ncols - 1)
            d2 = (PX - cx[rr, cc]) ** 2 + (PY - cy[rr, cc]) ** 2
            better = d2 < best_d2
            best_d2[better] = d2[better]
            best_id[better] = (rr * ncols + cc)[better]
    # Compact ids so labels are consecutive in scan order of first use.
    _, inv = np.unique(best_id, return_inverse=True)
    return LabelMap(inv.reshape(height, width))


def quadtree(image: np.ndarray, variance_threshold: float,
             min_block: int = 1, max_block: int | None = None) -> LabelMap:
    """Variance-driven quadtree partition of a square power-of-two image.

    A block splits while its side exceeds ``max_block``, or its intensity
    variance exceeds the threshold and its side exceeds ``min_block``.
    """
    img = np.asarray(image, dtype=np.float64)
    if img.ndim != 2 or img.shape[0] != img.shape[1]:
        raise NonSquareImage("quadtree requires a square image")
    side = img.shape[0]
    if side == 0 or side & (side - 1):
        raise NonPowerOfTwoSide(f"image side {side} is not a power of two")
    if max_block is None:
        max_block = side
    if min_block < 1 or max_block < min_block:
        raise ValueError("need 1 <= min_block <= max_block")

    # Summed-area tables give O(1) block variance.
    s1 = np.zeros((side + 1, side + 1))
    s2 = np.zeros((side + 1, side + 1))
    s1[1:, 1:] = img.cumsum(0).cumsum(1)
    s2[1:, 1:] = (img * img).cumsum(0).cumsum(1)

    def block_var(x, y, n):
        tot = s1[y + n, x + n] - s1[y, x + n] - s1[y + n, x] + s1[y, x]
        tot2 = s2[y + n, x + n] - s2[y, x + n] - s2[y + n, x] + s2[y, x]
        m = tot / (n * n)
        return tot2 / (n * n) - m * m

    labels = np.empty((side, side), dtype=np.int64)
    next_label = 0
    stack = [(0, 0, side)]
    leaves = []
    while stack:
        x, y, n = stack.pop()
        split = n > max_block or (n > min_block and block_var(x, y, n) > variance_threshold)
        if split:
            hn = n // 2
            # push in reverse so leaves come out NW, NE, SW, SE
            stack.append((x + hn, y + hn, hn))
            stack.append((x, y + hn, hn))
            stack.append((x + hn, y, hn))
            stack.append((x, y, hn))
        else:
            leaves.append((x, y, n))
    for x, y, n in leaves:
        labels[y:y + n, x:x + n] = next_label
        next_label += 1
    return LabelMap(labels)
