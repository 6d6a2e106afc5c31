"""Shape regularity metrics and decomposition quality measures.

Per-shape measures, all clamped to [0, 1]:

* circularity      4*pi*area / perimeter^2   (isoperimetric quotient; the
                   classical compactness measure, can exceed 1 on digital
                   shapes and is thresholded at 1)
* solidity         area / hull pixel area    (global convexity)
* vxy              sqrt(min(sx, sy) / max(sx, sy))  (balanced repartition
                   of pixels around the barycenter)
* smoothness       hull perimeter / shape perimeter (contour smoothness)

The decomposition-level regularity score is the area-weighted sum of
solidity * vxy * smoothness over all superpixels.  Undersegmentation
error and boundary recall compare a decomposition against ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum, pi, sqrt

import numpy as np

from . import _kernels
from .core import Decomposition, LabelMap, Shape, shape_perimeter
from .errors import DimensionMismatch
from .geometry import HullStats, hull_stats


@dataclass(frozen=True)
class ShapeMetrics:
    circularity: float
    solidity: float
    vxy: float
    contour_smoothness: float

    @property
    def src_term(self) -> float:
        return self.solidity * self.vxy * self.contour_smoothness


@dataclass(frozen=True)
class DecompositionMetrics:
    """Whole-decomposition values; means are area-weighted."""

    src: float
    circularity_mean: float
    solidity_mean: float
    vxy_mean: float
    contour_smoothness_mean: float
    n_superpixels: int
    ue: float | None = None
    br: float | None = None


def circularity(shape: Shape, perimeter: float | None = None) -> float:
    """4*pi*|S| / P(S)^2, thresholded at 1."""
    if perimeter is None:
        perimeter = shape_perimeter(shape)
    return min(1.0, 4.0 * pi * shape.area / (perimeter * perimeter))


def solidity(shape: Shape, hull: HullStats | None = None) -> float:
    """|S| / |CH|; <= 1 because the hull contains the shape."""
    if hull is None:
        hull = hull_stats(shape)
    return min(1.0, shape.area / hull.hull_area_px)


def vxy(shape: Shape) -> float:
    """sqrt(min(sx, sy) / max(sx, sy)).

    Both deviations zero (single pixel) counts as perfectly balanced;
    exactly one zero (a 1-pixel-thick line) as maximally unbalanced.
    """
    lo, hi = sorted((shape.sigma_x, shape.sigma_y))
    if hi == 0.0:
        return 1.0
    if lo == 0.0:
        return 0.0
    return sqrt(lo / hi)


def contour_smoothness(shape: Shape, hull: HullStats | None = None,
                       perimeter: float | None = None) -> float:
    """P(CH) / P(S), thresholded at 1; low for noisy or folded contours."""
    if hull is None:
        hull = hull_stats(shape)
    if perimeter is None:
        perimeter = shape_perimeter(shape)
    return min(1.0, hull.hull_perimeter / perimeter)


def shape_metrics(shape: Shape) -> ShapeMetrics:
    """All per-shape metrics, computing the perimeter and hull once."""
    perim = shape_perimeter(shape)
    hull = hull_stats(shape)
    return ShapeMetrics(
        circularity=circularity(shape, perim),
        solidity=solidity(shape, hull),
        vxy=vxy(shape),
        contour_smoothness=contour_smoothness(shape, hull, perim),
    )


def src(decomp: Decomposition) -> float:
    """Area-weighted sum of solidity * vxy * smoothness over all shapes."""
    return fsum(s.area * shape_metrics(s).src_term for s in decomp.shapes) / decomp.image_area


def decomposition_metrics(decomp: Decomposition,
                          ground_truths: list[LabelMap] | None = None,
                          eps: int = 2) -> DecompositionMetrics:
    """Evaluate a decomposition; UE/BR are averaged over the ground truths."""
    per_shape = [(s.area, shape_metrics(s)) for s in decomp.shapes]
    total = decomp.image_area
    ue = br = None
    if ground_truths:
        ue = fsum(undersegmentation_error(decomp, gt) for gt in ground_truths) / len(ground_truths)
        br = fsum(boundary_recall(decomp, gt, eps) for gt in ground_truths) / len(ground_truths)
    return DecompositionMetrics(
        src=fsum(a * m.src_term for a, m in per_shape) / total,
        circularity_mean=fsum(a * m.circularity for a, m in per_shape) / total,
        solidity_mean=fsum(a * m.solidity for a, m in per_shape) / total,
        vxy_mean=fsum(a * m.vxy for a, m in per_shape) / total,
        contour_smoothness_mean=fsum(a * m.contour_smoothness for a, m in per_shape) / total,
        n_superpixels=decomp.n_superpixels,
        ue=ue,
        br=br,
    )


def _check_same_grid(decomp: Decomposition, ground_truth: LabelMap):
    if decomp.source.labels.shape != ground_truth.labels.shape:
        raise DimensionMismatch(
            f"decomposition is {decomp.source.labels.shape}, "
            f"ground truth is {ground_truth.labels.shape}")


def undersegmentation_error(decomp: Decomposition, ground_truth: LabelMap) -> float:
    """Fraction of pixels leaking across ground-truth regions.

    Each superpixel is assigned to the ground-truth region it overlaps
    most; it contributes min(pixels inside that region, pixels outside
    it), counted once.  Zero iff every superpixel lies within a single
    region.  (UE definitions vary across the literature; this is the
    bounded min(in, out) variant.)
    """
    _check_same_grid(decomp, ground_truth)
    comp = decomp.component_map.ravel()
    gt = ground_truth.labels.ravel()
    n = decomp.n_superpixels
    _, gt_ids = np.unique(gt, return_inverse=True)
    pair = comp * (gt_ids.max() + 1) + gt_ids
    counts = np.bincount(pair, minlength=n * (gt_ids.max() + 1))
    overlap = counts.reshape(n, -1)
    areas = overlap.sum(axis=1)
    best = overlap.max(axis=1)
    leak = np.minimum(best, areas - best)
    return float(leak.sum()) / decomp.image_area


def boundary_recall(decomp: Decomposition, ground_truth: LabelMap, eps: int = 2) -> float:
    """Fraction of ground-truth boundary pixels with a decomposition
    boundary pixel within Chebyshev distance eps.

    Boundaries are one-sided label transitions (a pixel whose right or
    down neighbor has a different label).  A ground truth with no
    internal boundary recalls vacuously (1.0).
    """
    _check_same_grid(decomp, ground_truth)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    gt_b = _kernels.transition_mask(ground_truth.labels)
    dec_b = _kernels.transition_mask(decomp.component_map)
    matched, total = _kernels.chebyshev_match(gt_b, dec_b, eps)
    if total == 0:
        return 1.0
    return matched / total
