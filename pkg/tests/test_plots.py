from __future__ import annotations

import pytest

from spxreg.errors import EmptySeries
from spxreg.plots import Series, emit_plot


def test_five_point_series_has_five_markers():
    svg = emit_plot([Series("a", (1, 2, 3, 4, 5), (0.1, 0.2, 0.15, 0.3, 0.25))],
                    "x", "y")
    assert svg.count("<circle") == 5
    assert svg.count("<polyline") == 1
    assert "<svg" in svg and "</svg>" in svg

def test_axes_and_legend_labels():
    svg = emit_plot([Series("curve-name", (0, 1), (0, 1))], "size", "measure",
                    title="demo")
    for text in ("size", "measure", "curve-name", "demo"):
        assert text in svg

def test_empty_series_rejected():
    with pytest.raises(EmptySeries):
        emit_plot([], "x", "y")
    with pytest.raises(EmptySeries):
        Series("bad", (), ())

def test_mismatched_lengths_rejected():
    with pytest.raises(EmptySeries):
        Series("bad", (1, 2), (1,))

def test_deterministic():
    series = [Series("a", (1, 2), (3, 4)), Series("b", (1, 2), (4, 3))]
    assert emit_plot(series, "x", "y") == emit_plot(series, "x", "y")

def test_constant_series_does_not_degenerate():
    svg = emit_plot([Series("flat", (1, 2, 3), (0.5, 0.5, 0.5))], "x", "y")
    assert svg.count("<circle") == 3
