"""Barycenter adjacency graph of a decomposition.

Nodes are superpixel barycenters; an edge joins two superpixels when any
of their pixels are 4-adjacent: a region-adjacency graph drawn between
barycenters, not a true Delaunay triangulation, which is what
decomposition overlay figures conventionally show.
Edge-length statistics quantify how evenly the decomposition spreads its
superpixels.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .core import Decomposition
from .errors import NoEdges


@dataclass(frozen=True)
class AdjacencyGraph:
    """nodes[i] = (label, barycenter); edges map a label pair (a < b) to
    the euclidean distance between the two barycenters."""

    nodes: tuple[tuple[int, tuple[float, float]], ...]
    edges: dict[tuple[int, int], float]

    @property
    def degenerate_edges(self) -> list[tuple[int, int]]:
        """Edges of length 0 (coincident barycenters, e.g. concentric
        shapes); flagged so statistics users can exclude or inspect them."""
        return [pair for pair, length in self.edges.items() if length == 0.0]


@dataclass(frozen=True)
class EdgeStats:
    mean_length: float
    stddev_length: float
    coefficient_of_variation: float
    min_length: float
    max_length: float


def adjacency_graph(decomp: Decomposition) -> AdjacencyGraph:
    """Region-adjacency graph over barycenters (4-adjacency)."""
    comp = decomp.component_map
    pairs = set()
    h = np.stack([comp[:, :-1].ravel(), comp[:, 1:].ravel()], axis=1)
    v = np.stack([comp[:-1, :].ravel(), comp[1:, :].ravel()], axis=1)
    for arr in (h, v):
        diff = arr[arr[:, 0] != arr[:, 1]]
        lo = np.minimum(diff[:, 0], diff[:, 1])
        hi = np.maximum(diff[:, 0], diff[:, 1])
        pairs.update(zip(lo.tolist(), hi.tolist()))

    shapes = decomp.shapes
    nodes = tuple((s.label, s.barycenter) for s in shapes)
    edges = {}
    for i, j in sorted(pairs):
        (xa, ya), (xb, yb) = shapes[i].barycenter, shapes[j].barycenter
        la, lb = shapes[i].label, shapes[j].label
        key = (la, lb) if la < lb else (lb, la)
        edges[key] = sqrt((xa - xb) ** 2 + (ya - yb) ** 2)
    return AdjacencyGraph(nodes, edges)


def edge_stats(graph: AdjacencyGraph) -> EdgeStats:
    """Exact length statistics over all edges."""
    if not graph.edges:
        raise NoEdges("graph has no edges")
    lengths = np.array(sorted(graph.edges.values()), dtype=np.float64)
    mean = float(lengths.mean())
    std = float(lengths.std())
    cv = std / mean if mean > 0 else 0.0
    return EdgeStats(mean, std, cv, float(lengths[0]), float(lengths[-1]))


def edge_list_text(graph: AdjacencyGraph) -> str:
    """One `label_a label_b length` line per edge, sorted by label pair."""
    lines = [f"{a} {b} {graph.edges[(a, b)]:.6f}" for a, b in sorted(graph.edges)]
    return "\n".join(lines) + "\n"


def graph_svg(decomp: Decomposition, graph: AdjacencyGraph | None = None,
              scale: float = 1.0) -> str:
    """Standalone SVG: superpixel boundaries with the barycenter graph
    overlaid.  Deterministic for identical inputs."""
    if graph is None:
        graph = adjacency_graph(decomp)
    w, h = decomp.source.width, decomp.source.height
    sw = w * scale
    sh = h * scale

    def pt(x, y):
        return f"{x * scale:.2f},{y * scale:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{sw:.0f}" '
        f'height="{sh:.0f}" viewBox="0 0 {sw:.2f} {sh:.2f}">',
        f'<rect width="{sw:.2f}" height="{sh:.2f}" fill="white"/>',
    ]
    # superpixel boundaries as crack segments between differing labels
    comp = decomp.component_map
    segs = []
    ys, xs = np.nonzero(comp[:, :-1] != comp[:, 1:])
    for y, x in zip(ys.tolist(), xs.tolist()):
        segs.append(f"M{pt(x + 1, y)}L{pt(x + 1, y + 1)}")
    ys, xs = np.nonzero(comp[:-1, :] != comp[1:, :])
    for y, x in zip(ys.tolist(), xs.tolist()):
        segs.append(f"M{pt(x, y + 1)}L{pt(x + 1, y + 1)}")
    out.append(f'<path d="{"".join(segs)}" stroke="#888888" '
               f'stroke-width="{0.6 * scale:.2f}" fill="none"/>')

    label_pos = {label: bc for label, bc in graph.nodes}
    for (a, b) in sorted(graph.edges):
        (xa, ya), (xb, yb) = label_pos[a], label_pos[b]
        out.append(f'<line x1="{(xa + 0.5) * scale:.2f}" y1="{(ya + 0.5) * scale:.2f}" '
                   f'x2="{(xb + 0.5) * scale:.2f}" y2="{(yb + 0.5) * scale:.2f}" '
                   f'stroke="#cc2222" stroke-width="{0.8 * scale:.2f}"/>')
    for label, (x, y) in graph.nodes:
        out.append(f'<circle cx="{(x + 0.5) * scale:.2f}" cy="{(y + 0.5) * scale:.2f}" '
                   f'r="{1.6 * scale:.2f}" fill="#2244cc"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
