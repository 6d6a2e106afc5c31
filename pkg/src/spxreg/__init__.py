"""spxreg: shape-regularity evaluation of superpixel decompositions."""

from ._kernels import BACKEND as kernel_backend
from .core import (ConnectivityPolicy, Decomposition, LabelMap, Shape,
                   boundary_pixels, extract_superpixels, moments,
                   perimeter_measure, shape_from_mask, shape_perimeter)
from .geometry import HullStats, Polygon, convex_hull, hull_stats, point_in_polygon
from .metrics import (DecompositionMetrics, ShapeMetrics, boundary_recall,
                      circularity, contour_smoothness, decomposition_metrics,
                      shape_metrics, solidity, src, undersegmentation_error, vxy)
from .synth import (IRREGULAR, REGULAR, STANDARD, NoiseSpec, ShapeKind,
                    hex_grid, make_shape, perturb_boundary, quadtree,
                    square_grid)

__version__ = "0.1.0"

__all__ = [
    "kernel_backend",
    "ConnectivityPolicy", "Decomposition", "LabelMap", "Shape",
    "boundary_pixels", "extract_superpixels", "moments",
    "perimeter_measure", "shape_from_mask", "shape_perimeter",
    "HullStats", "Polygon", "convex_hull", "hull_stats", "point_in_polygon",
    "DecompositionMetrics", "ShapeMetrics", "boundary_recall", "circularity",
    "contour_smoothness", "decomposition_metrics", "shape_metrics",
    "solidity", "src", "undersegmentation_error", "vxy",
    "REGULAR", "STANDARD", "IRREGULAR", "NoiseSpec", "ShapeKind",
    "hex_grid", "make_shape", "perturb_boundary", "quadtree", "square_grid",
]
