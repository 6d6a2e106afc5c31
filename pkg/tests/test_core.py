from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spxreg.core import (ConnectivityPolicy, LabelMap, boundary_pixels,
                         extract_superpixels, moments, perimeter_measure,
                         shape_from_mask, trace_contours)
from spxreg.errors import DisconnectedLabel, EmptyInput, EmptyMap

from conftest import random_blob, random_partition
from oracles import naive_boundary, naive_moments


class TestLabelMap:
    def test_rejects_empty(self):
        with pytest.raises(EmptyMap):
            LabelMap(np.zeros((0, 3), dtype=np.int64))

    def test_rejects_negative(self):
        with pytest.raises(EmptyMap):
            LabelMap(np.array([[0, -1]]))

    def test_dimensions(self):
        lm = LabelMap(np.zeros((3, 5), dtype=np.int64))
        assert (lm.width, lm.height, lm.image_area) == (5, 3, 15)


class TestExtraction:
    def test_single_label(self):
        lm = LabelMap(np.zeros((2, 2), dtype=np.int64))
        d = extract_superpixels(lm)
        assert d.n_superpixels == 1
        s = d.shapes[0]
        assert s.area == 4
        assert s.barycenter == (0.5, 0.5)

    def test_split_disconnected(self):
        lm = LabelMap(np.array([[0, 1, 0, 1]]))
        d = extract_superpixels(lm, ConnectivityPolicy.SPLIT_DISCONNECTED)
        assert d.n_superpixels == 4
        assert all(s.area == 1 for s in d.shapes)
        assert sorted(s.label for s in d.shapes) == [0, 1, 2, 3]

    def test_strict_raises(self):
        lm = LabelMap(np.array([[0, 1, 0, 1]]))
        with pytest.raises(DisconnectedLabel):
            extract_superpixels(lm, ConnectivityPolicy.STRICT)

    def test_partition_property_random(self):
        for seed in range(25):
            lm = random_partition(seed)
            d = extract_superpixels(lm)
            assert sum(s.area for s in d.shapes) == lm.image_area
            seen = np.zeros(lm.labels.shape, dtype=int)
            for s in d.shapes:
                seen[s.ys, s.xs] += 1
            assert (seen == 1).all()

    def test_component_map_matches_shapes(self):
        lm = random_partition(3)
        d = extract_superpixels(lm)
        for idx, s in enumerate(d.shapes):
            assert (d.component_map[s.ys, s.xs] == idx).all()


class TestBoundary:
    def test_single_pixel(self):
        assert boundary_pixels({(4, 5)}) == {(4, 5)}

    def test_full_3x3(self):
        pts = {(x, y) for x in range(3) for y in range(3)}
        b = boundary_pixels(pts)
        assert len(b) == 8
        assert (1, 1) not in b

    def test_full_10x10(self):
        pts = {(x, y) for x in range(10) for y in range(10)}
        assert len(boundary_pixels(pts)) == 36  # 4p - 4

    def test_empty_raises(self):
        with pytest.raises(EmptyInput):
            boundary_pixels(set())

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=60, deadline=None)
    def test_matches_naive_on_blobs(self, seed):
        s = random_blob(seed)
        assert s.boundary_set() == naive_boundary(s.pixel_set())

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_boundary_minimality(self, seed):
        # removing any reported pixel leaves an exterior-adjacent pixel
        # unreported, i.e. the set is exactly the boundary, no slack
        s = random_blob(seed)
        pts = s.pixel_set()
        for p in s.boundary_set():
            assert p in naive_boundary(pts)


class TestMoments:
    def test_single_pixel(self):
        (mx, my), sx, sy = moments([3], [7])
        assert (mx, my, sx, sy) == (3.0, 7.0, 0.0, 0.0)

    def test_rectangle_3x2(self):
        xs = [x for x in range(3) for _ in range(2)]
        ys = [y for _ in range(3) for y in range(2)]
        _, sx, sy = moments(xs, ys)
        assert sx == pytest.approx(math.sqrt(2.0 / 3.0), abs=1e-12)
        assert sy == pytest.approx(0.5, abs=1e-12)

    def test_square_symmetry(self):
        for p in (1, 4, 9):
            xs = [x for x in range(p) for _ in range(p)]
            ys = [y for _ in range(p) for y in range(p)]
            _, sx, sy = moments(xs, ys)
            assert sx == sy

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=60, deadline=None)
    def test_matches_naive_two_pass(self, seed):
        s = random_blob(seed)
        (mx, my), sx, sy = moments(s.xs, s.ys)
        (omx, omy), osx, osy = naive_moments(list(s.pixel_set()))
        assert mx == pytest.approx(omx, abs=1e-12)
        assert my == pytest.approx(omy, abs=1e-12)
        assert sx == pytest.approx(osx, abs=1e-12)
        assert sy == pytest.approx(osy, abs=1e-12)

    def test_order_invariance(self):
        s = random_blob(11)
        perm = np.random.default_rng(0).permutation(s.area)
        a = moments(s.xs, s.ys)
        b = moments(s.xs[perm], s.ys[perm])
        assert a[1] == pytest.approx(b[1], abs=1e-12)
        assert a[2] == pytest.approx(b[2], abs=1e-12)


class TestPerimeter:
    def test_single_pixel(self):
        assert perimeter_measure(np.ones((1, 1), dtype=np.uint8)) == 1.0

    def test_square_chain(self):
        from spxreg.core import CORNER_CORRECTION
        for p in (3, 10, 36):
            m = np.ones((p, p), dtype=np.uint8)
            expect = 4 * (p - 1) - 4 * CORNER_CORRECTION
            assert perimeter_measure(m) == pytest.approx(expect, abs=1e-9)

    def test_line(self):
        from spxreg.core import CORNER_CORRECTION
        m = np.ones((1, 7), dtype=np.uint8)
        assert perimeter_measure(m) == pytest.approx(12 - 2 * CORNER_CORRECTION, abs=1e-9)

    def test_hole_counts(self):
        ring = np.ones((5, 5), dtype=np.uint8)
        solid = perimeter_measure(ring.copy())
        ring[2, 2] = 0
        assert perimeter_measure(ring) > solid

    def test_contour_count_with_hole(self):
        ring = np.ones((5, 5), dtype=np.uint8)
        ring[2, 2] = 0
        assert len(trace_contours(ring)) == 2

    def test_translation_invariance(self):
        s = random_blob(5)
        m, _, _ = s.mask()
        padded = np.zeros((m.shape[0] + 6, m.shape[1] + 4), dtype=np.uint8)
        padded[3:3 + m.shape[0], 2:2 + m.shape[1]] = m
        assert perimeter_measure(padded) == perimeter_measure(m)


def test_shape_from_mask_roundtrip():
    s = random_blob(9)
    m, x0, y0 = s.mask()
    s2 = shape_from_mask(m, origin=(x0, y0))
    assert s2.pixel_set() == s.pixel_set()
    assert s2.boundary_set() == s.boundary_set()
