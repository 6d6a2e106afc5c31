from __future__ import annotations

import numpy as np
import pytest

from spxreg.core import shape_from_mask
from spxreg.errors import ShapeVanished
from spxreg.studies import (NOISE_FIELDS, SHAPE_FIELDS, noise_sweep,
                            rows_to_csv, shape_table)
from spxreg.synth import NoiseSpec, ShapeKind, perturb_boundary


def test_shape_table_smooth_covers_all_kinds():
    rows = shape_table([100])
    assert len(rows) == 9
    by_kind = {r.kind: r for r in rows}
    assert by_kind["square"].src == pytest.approx(1.0, abs=1e-12)
    assert by_kind["square"].seeds == 0  # no noise applied
    c = {k: r.circularity for k, r in by_kind.items()}
    assert c["circle"] > c["hexagon"] > c["ellipse"] > c["square"]


def test_shape_table_size_sweep_rows():
    rows = shape_table([16, 32], kinds=[ShapeKind.SQUARE, ShapeKind.CIRCLE])
    assert [(r.kind, r.size) for r in rows] == [
        ("square", 16), ("square", 32), ("circle", 16), ("circle", 32)]


def test_shape_table_noisy_uses_seeds():
    rows = shape_table([48], amplitude=0.2, seeds=4, kinds=[ShapeKind.BEAN])
    (row,) = rows
    assert row.seeds == 4
    assert row.src < shape_table([48], kinds=[ShapeKind.BEAN])[0].src


def test_noise_sweep_monotone_for_square():
    rows = noise_sweep(ShapeKind.SQUARE, 64, [0.0, 0.2, 0.4], seeds=6)
    assert rows[0].src_mean == pytest.approx(1.0, abs=1e-12)
    assert rows[0].src_mean > rows[1].src_mean > rows[2].src_mean


def test_rows_to_csv_layout():
    rows = shape_table([100], kinds=[ShapeKind.SQUARE])
    text = rows_to_csv(rows, SHAPE_FIELDS)
    header, line = text.strip().split("\n")
    assert header == ",".join(SHAPE_FIELDS)
    assert line.startswith("square,100,")
    assert line.endswith("1.000000")
    assert rows_to_csv(noise_sweep(ShapeKind.SQUARE, 32, [0.0], 1),
                       NOISE_FIELDS).startswith(",".join(NOISE_FIELDS))


def test_perturb_can_vanish_single_pixel():
    # seed found by search; Philox keys make it reproducible forever
    s = shape_from_mask(np.ones((1, 1), dtype=np.uint8))
    with pytest.raises(ShapeVanished):
        perturb_boundary(s, NoiseSpec(0.2, 1, seed=7))
