"""Reusable experiment drivers behind the `study` CLI commands: the
benchmark-shape table, the size sweep, and noise-robustness curves."""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum

from .metrics import ShapeMetrics, shape_metrics
from .synth import NoiseSpec, ShapeKind, make_shape, perturb_boundary


@dataclass(frozen=True)
class ShapeStudyRow:
    kind: str
    size: int
    amplitude: float
    rounds: int
    seeds: int
    circularity: float
    solidity: float
    vxy: float
    contour_smoothness: float
    src: float


def _mean_metrics(metrics: list[ShapeMetrics]) -> tuple[float, float, float, float, float]:
    n = len(metrics)
    return (fsum(m.circularity for m in metrics) / n,
            fsum(m.solidity for m in metrics) / n,
            fsum(m.vxy for m in metrics) / n,
            fsum(m.contour_smoothness for m in metrics) / n,
            fsum(m.src_term for m in metrics) / n)


def shape_table(sizes: list[int], amplitude: float = 0.0, rounds: int = 1,
                seeds: int = 1, base_seed: int = 0,
                kinds: list[ShapeKind] | None = None) -> list[ShapeStudyRow]:
    """Per-shape metrics for each (kind, size); noisy values are averaged
    over `seeds` seeded perturbations."""
    rows = []
    for kind in kinds or list(ShapeKind):
        for size in sizes:
            base = make_shape(kind, size)
            if amplitude == 0.0:
                ms = [shape_metrics(base)]
                n_seeds = 0
            else:
                ms = [shape_metrics(perturb_boundary(base, NoiseSpec(amplitude, rounds, base_seed + i)))
                      for i in range(seeds)]
                n_seeds = seeds
            c, so, v, co, term = _mean_metrics(ms)
            rows.append(ShapeStudyRow(kind.value, size, amplitude, rounds,
                                      n_seeds, c, so, v, co, term))
    return rows


@dataclass(frozen=True)
class NoiseStudyRow:
    kind: str
    size: int
    amplitude: float
    rounds: int
    seeds: int
    circularity_mean: float
    src_mean: float


def noise_sweep(kind: ShapeKind, size: int, amplitudes: list[float],
                seeds: int, rounds: int = 1, base_seed: int = 0) -> list[NoiseStudyRow]:
    """Mean metrics per amplitude; amplitude 0 needs no perturbation."""
    base = make_shape(kind, size)
    rows = []
    for amp in amplitudes:
        if amp == 0.0:
            ms = [shape_metrics(base)]
        else:
            ms = [shape_metrics(perturb_boundary(base, NoiseSpec(amp, rounds, base_seed + i)))
                  for i in range(seeds)]
        c, _, _, _, term = _mean_metrics(ms)
        rows.append(NoiseStudyRow(kind.value, size, amp, rounds,
                                  0 if amp == 0.0 else seeds, c, term))
    return rows


def rows_to_csv(rows, fields: tuple[str, ...]) -> str:
    lines = [",".join(fields)]
    for row in rows:
        cells = []
        for f in fields:
            v = getattr(row, f)
            cells.append(f"{v:.6f}" if isinstance(v, float) else str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


SHAPE_FIELDS = ("kind", "size", "amplitude", "rounds", "seeds",
                "circularity", "solidity", "vxy", "contour_smoothness", "src")
NOISE_FIELDS = ("kind", "size", "amplitude", "rounds", "seeds",
                "circularity_mean", "src_mean")
