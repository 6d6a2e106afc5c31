from __future__ import annotations

import numpy as np
import pytest

from spxreg.core import LabelMap, extract_superpixels
from spxreg.errors import NoEdges
from spxreg.graph import (AdjacencyGraph, adjacency_graph, edge_list_text,
                          edge_stats, graph_svg)
from spxreg.synth import quadtree, square_grid

from conftest import random_partition


class TestAdjacencyGraph:
    def test_2x2_blocks(self):
        d = extract_superpixels(square_grid(8, 8, 4))
        g = adjacency_graph(d)
        assert len(g.nodes) == 4
        assert len(g.edges) == 4  # no diagonal adjacency
        lengths = set(g.edges.values())
        assert lengths == {4.0}

    def test_grid_edge_count_formula(self):
        for r, c in [(3, 4), (5, 5), (2, 7)]:
            d = extract_superpixels(square_grid(c * 10, r * 10, r * c))
            g = adjacency_graph(d)
            assert len(g.nodes) == r * c
            assert len(g.edges) == r * (c - 1) + c * (r - 1)

    def test_uniform_grid_cv_zero(self):
        d = extract_superpixels(square_grid(120, 120, 16))
        st = edge_stats(adjacency_graph(d))
        assert st.coefficient_of_variation == 0.0

    def test_symmetry_under_relabeling(self):
        lm = random_partition(12)
        d1 = extract_superpixels(lm)
        # permute label values; adjacency structure must be identical
        perm = {0: 40, 1: 10, 2: 33, 3: 2, 4: 27}
        relabeled = LabelMap(np.vectorize(perm.get)(lm.labels))
        d2 = extract_superpixels(relabeled)
        g1, g2 = adjacency_graph(d1), adjacency_graph(d2)
        remapped = {tuple(sorted((perm[a], perm[b]))): l
                    for (a, b), l in g1.edges.items()}
        assert {k: pytest.approx(v) for k, v in remapped.items()} == g2.edges

    def test_quadtree_cv_exceeds_grid(self):
        # a diagonal edge never aligns with block boundaries, so the
        # quadtree mixes large uniform blocks with small edge blocks
        ii = np.indices((128, 128)).sum(axis=0)
        img = np.where(ii < 128, 0, 255).astype(np.int64)
        qt = quadtree(img, variance_threshold=10.0, min_block=8)
        dq = extract_superpixels(qt)
        dg = extract_superpixels(square_grid(128, 128, dq.n_superpixels))
        cv_q = edge_stats(adjacency_graph(dq)).coefficient_of_variation
        cv_g = edge_stats(adjacency_graph(dg)).coefficient_of_variation
        assert cv_q > cv_g


class TestEdgeStats:
    def test_single_edge(self):
        g = AdjacencyGraph(((0, (0.0, 0.0)), (1, (3.0, 4.0))), {(0, 1): 5.0})
        st = edge_stats(g)
        assert st.mean_length == 5.0
        assert st.coefficient_of_variation == 0.0

    def test_two_lengths(self):
        g = AdjacencyGraph((), {(0, 1): 3.0, (1, 2): 4.0})
        st = edge_stats(g)
        assert st.mean_length == 3.5
        assert st.stddev_length == 0.5
        assert st.coefficient_of_variation == pytest.approx(1.0 / 7.0)
        assert (st.min_length, st.max_length) == (3.0, 4.0)

    def test_no_edges(self):
        with pytest.raises(NoEdges):
            edge_stats(AdjacencyGraph(((0, (1.0, 1.0)),), {}))


class TestExports:
    def test_edge_list_format(self):
        d = extract_superpixels(square_grid(8, 8, 4))
        text = edge_list_text(adjacency_graph(d))
        lines = text.strip().split("\n")
        assert len(lines) == 4
        a, b, length = lines[0].split()
        assert int(a) < int(b)
        assert float(length) == 4.0

    def test_svg_deterministic(self):
        d = extract_superpixels(random_partition(3))
        assert graph_svg(d) == graph_svg(d)

    def test_svg_contains_nodes_and_edges(self):
        d = extract_superpixels(square_grid(8, 8, 4))
        svg = graph_svg(d)
        assert svg.count("<circle") == 4
        assert svg.count("<line") == 4
        assert svg.startswith("<svg")
