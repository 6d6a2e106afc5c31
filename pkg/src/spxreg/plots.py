"""Minimal deterministic SVG line plots (axes, ticks, legend, markers).

Output is a pure function of the input series, so reruns are
byte-identical, which makes figure generation regression-testable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySeries

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class Series:
    name: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self):
        if len(self.xs) != len(self.ys) or not self.xs:
            raise EmptySeries(f"series {self.name!r} needs matching non-empty x/y")


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def emit_plot(series: list[Series], x_label: str, y_label: str,
              title: str = "", width: int = 640, height: int = 420) -> str:
    """Render series as an SVG string with labeled axes and a legend."""
    if not series:
        raise EmptySeries("no series to plot")
    ml, mr, mt, mb = 62, 18, 34, 48
    pw, ph = width - ml - mr, height - mt - mb
    x_lo = min(min(s.xs) for s in series)
    x_hi = max(max(s.xs) for s in series)
    y_lo = min(min(s.ys) for s in series)
    y_hi = max(max(s.ys) for s in series)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def sx(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * pw

    def sy(y):
        return mt + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
           f'<rect width="{width}" height="{height}" fill="white"/>']
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" '
                   f'font-size="14">{title}</text>')
    out.append(f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" '
               f'fill="none" stroke="#333333"/>')
    for tx in _ticks(x_lo, x_hi):
        out.append(f'<line x1="{sx(tx):.2f}" y1="{mt + ph}" x2="{sx(tx):.2f}" '
                   f'y2="{mt + ph + 5}" stroke="#333333"/>')
        out.append(f'<text x="{sx(tx):.2f}" y="{mt + ph + 18}" '
                   f'text-anchor="middle">{tx:.6g}</text>')
    for ty in _ticks(y_lo, y_hi):
        out.append(f'<line x1="{ml - 5}" y1="{sy(ty):.2f}" x2="{ml}" '
                   f'y2="{sy(ty):.2f}" stroke="#333333"/>')
        out.append(f'<text x="{ml - 8}" y="{sy(ty) + 4:.2f}" '
                   f'text-anchor="end">{ty:.6g}</text>')
    out.append(f'<text x="{ml + pw / 2:.1f}" y="{height - 10}" '
               f'text-anchor="middle">{x_label}</text>')
    out.append(f'<text x="16" y="{mt + ph / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {mt + ph / 2:.1f})">{y_label}</text>')

    for idx, s in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(s.xs, s.ys))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                   f'stroke-width="1.6"/>')
        for x, y in zip(s.xs, s.ys):
            out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3" '
                       f'fill="{color}"/>')
        ly = mt + 14 + 16 * idx
        out.append(f'<line x1="{ml + pw - 120}" y1="{ly - 4}" x2="{ml + pw - 96}" '
                   f'y2="{ly - 4}" stroke="{color}" stroke-width="1.6"/>')
        out.append(f'<text x="{ml + pw - 90}" y="{ly}">{s.name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
