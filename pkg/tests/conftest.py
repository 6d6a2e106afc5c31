from __future__ import annotations

import random

import numpy as np
import pytest

from spxreg.core import LabelMap, Shape, shape_from_mask


def random_blob(seed: int, max_side: int = 12, target: int | None = None) -> Shape:
    """Random 4-connected blob grown pixel by pixel inside a box."""
    rng = random.Random(seed)
    if target is None:
        target = rng.randint(1, max_side * max_side // 2)
    mask = np.zeros((max_side, max_side), dtype=np.uint8)
    x = rng.randrange(max_side)
    y = rng.randrange(max_side)
    mask[y, x] = 1
    frontier = [(x, y)]
    while int(mask.sum()) < target and frontier:
        x, y = frontier[rng.randrange(len(frontier))]
        options = [(x + dx, y + dy) for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
                   if 0 <= x + dx < max_side and 0 <= y + dy < max_side
                   and not mask[y + dy, x + dx]]
        if not options:
            frontier.remove((x, y))
            continue
        nx, ny = options[rng.randrange(len(options))]
        mask[ny, nx] = 1
        frontier.append((nx, ny))
    return shape_from_mask(mask)


def random_partition(seed: int, width: int = 20, height: int = 16,
                     k: int = 5) -> LabelMap:
    """Nearest-center (Voronoi) partition with random centers."""
    rng = np.random.default_rng(seed)
    cx = rng.uniform(0, width, k)
    cy = rng.uniform(0, height, k)
    px, py = np.meshgrid(np.arange(width) + 0.5, np.arange(height) + 0.5)
    d2 = (px[..., None] - cx) ** 2 + (py[..., None] - cy) ** 2
    return LabelMap(d2.argmin(axis=2).astype(np.int64))


@pytest.fixture
def blob():
    return random_blob
