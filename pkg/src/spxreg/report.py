"""Evaluation report records and their CSV/JSON serialization.

JSON round-trips losslessly (floats carry full repr precision); CSV rows
show 9 significant digits.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .metrics import DecompositionMetrics

CSV_FIELDS = ("input_id", "n_superpixels", "circularity_mean", "src",
              "solidity_mean", "vxy_mean", "contour_smoothness_mean",
              "ue", "br", "eps", "noise_amplitude", "noise_rounds", "seed")


@dataclass(frozen=True)
class ReportRecord:
    """One evaluated input: metric values plus the parameters used."""

    input_id: str
    n_superpixels: int
    circularity_mean: float
    src: float
    solidity_mean: float
    vxy_mean: float
    contour_smoothness_mean: float
    ue: float | None = None
    br: float | None = None
    eps: int | None = None
    noise_amplitude: float | None = None
    noise_rounds: int | None = None
    seed: int | None = None

    @classmethod
    def from_metrics(cls, input_id: str, m: DecompositionMetrics,
                     eps: int | None = None, **params) -> "ReportRecord":
        return cls(input_id=input_id, n_superpixels=m.n_superpixels,
                   circularity_mean=m.circularity_mean, src=m.src,
                   solidity_mean=m.solidity_mean, vxy_mean=m.vxy_mean,
                   contour_smoothness_mean=m.contour_smoothness_mean,
                   ue=m.ue, br=m.br, eps=eps, **params)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def records_to_csv(records: list[ReportRecord]) -> str:
    lines = [",".join(CSV_FIELDS)]
    for r in records:
        d = asdict(r)
        lines.append(",".join(_fmt(d[f]) for f in CSV_FIELDS))
    return "\n".join(lines) + "\n"


def records_to_json(records: list[ReportRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list[ReportRecord]:
    return [ReportRecord(**d) for d in json.loads(text)]


def write_report(path, records: list[ReportRecord]):
    path = str(path)
    if path.endswith(".json"):
        text = records_to_json(records)
    elif path.endswith(".csv"):
        text = records_to_csv(records)
    else:
        raise ValueError(f"report path must end in .csv or .json, got {path!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
