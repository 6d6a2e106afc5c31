"""Pure numpy implementations of the per-pixel kernels.

Selected at import time by :mod:`spxreg._kernels` when the compiled
extension is unavailable (or ``SPXREG_PURE`` is set).  Semantics are
bit-identical to the Cython versions; only speed differs.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def label_components(labels: np.ndarray, connectivity: int = 4) -> tuple[np.ndarray, int]:
    """Connected components of equal-valued regions (4- or 8-connectivity).

    Returns ``(comp, n)`` where ``comp`` numbers components 0..n-1 in
    row-major order of each component's first pixel.
    """
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    labels = np.ascontiguousarray(labels, dtype=np.int64)
    h, w = labels.shape
    # Run-length encode each row; union runs against overlapping runs of
    # the previous row.  Far fewer union operations than per-pixel.
    row_runs = []  # (start_col, end_col, value) per row
    n_runs = 0
    run_row_offsets = [0]
    starts_all, ends_all, vals_all = [], [], []
    for y in range(h):
        row = labels[y]
        breaks = np.flatnonzero(row[1:] != row[:-1]) + 1
        starts = np.concatenate(([0], breaks))
        ends = np.concatenate((breaks, [w]))
        starts_all.append(starts)
        ends_all.append(ends)
        vals_all.append(row[starts])
        n_runs += len(starts)
        run_row_offsets.append(n_runs)

    slack = 1 if connectivity == 8 else 0  # diagonal contact allowance
    parent = list(range(n_runs))
    for y in range(1, h):
        off_p, off_c = run_row_offsets[y - 1], run_row_offsets[y]
        sp, ep, vp = starts_all[y - 1], ends_all[y - 1], vals_all[y - 1]
        sc, ec, vc = starts_all[y], ends_all[y], vals_all[y]
        j = 0
        for i in range(len(sc)):
            while j < len(sp) and ep[j] + slack <= sc[i]:  # j left of i's reach
                j += 1
            jj = j
            while jj < len(sp) and sp[jj] < ec[i] + slack:
                if vc[i] == vp[jj]:
                    ra, rb = _find(parent, off_c + i), _find(parent, off_p + jj)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                jj += 1

    # Scan-order relabeling keeps ids deterministic.
    comp_of_run = np.empty(n_runs, dtype=np.int64)
    next_id = 0
    seen: dict[int, int] = {}
    for r in range(n_runs):
        root = _find(parent, r)
        if root not in seen:
            seen[root] = next_id
            next_id += 1
        comp_of_run[r] = seen[root]

    comp = np.empty((h, w), dtype=np.int64)
    for y in range(h):
        o = run_row_offsets[y]
        lengths = ends_all[y] - starts_all[y]
        comp[y] = np.repeat(comp_of_run[o:o + len(lengths)], lengths)
    return comp, next_id


def boundary_mask(labels: np.ndarray) -> np.ndarray:
    """Pixels with a 4-neighbor of different value or on the image border."""
    labels = np.asarray(labels)
    b = np.zeros(labels.shape, dtype=np.uint8)
    b[0, :] = b[-1, :] = 1
    b[:, 0] = b[:, -1] = 1
    hdiff = labels[:, :-1] != labels[:, 1:]
    vdiff = labels[:-1, :] != labels[1:, :]
    b[:, :-1] |= hdiff
    b[:, 1:] |= hdiff
    b[:-1, :] |= vdiff
    b[1:, :] |= vdiff
    return b


def transition_mask(labels: np.ndarray) -> np.ndarray:
    """One-sided label transitions (right/down), the thin boundary map
    used for boundary recall."""
    labels = np.asarray(labels)
    t = np.zeros(labels.shape, dtype=np.uint8)
    t[:, :-1] |= labels[:, :-1] != labels[:, 1:]
    t[:-1, :] |= labels[:-1, :] != labels[1:, :]
    return t


def rasterize_convex(vx: np.ndarray, vy: np.ndarray,
                     x0: int, y0: int, w: int, h: int,
                     eps: float) -> np.ndarray:
    """Mask of pixels in [x0,x0+w) x [y0,y0+h) whose center lies inside or
    on (within eps, cross-product units) a CCW convex polygon."""
    vx = np.asarray(vx, dtype=np.float64)
    vy = np.asarray(vy, dtype=np.float64)
    cx = x0 + np.arange(w, dtype=np.float64) + 0.5
    cy = y0 + np.arange(h, dtype=np.float64) + 0.5
    inside = np.ones((h, w), dtype=bool)
    m = len(vx)
    for i in range(m):
        ax, ay = vx[i], vy[i]
        bx, by = vx[(i + 1) % m], vy[(i + 1) % m]
        cross = (bx - ax) * (cy[:, None] - ay) - (by - ay) * (cx[None, :] - ax)
        inside &= cross >= -eps
    return inside.astype(np.uint8)


def chebyshev_match(gt_boundary: np.ndarray, pred_boundary: np.ndarray,
                    eps: int) -> tuple[int, int]:
    """Count ground-truth boundary pixels with a predicted boundary pixel
    within Chebyshev distance eps.  Returns (matched, total)."""
    gt = np.asarray(gt_boundary, dtype=bool)
    pred = np.asarray(pred_boundary, dtype=bool)
    dil = pred
    for axis in (0, 1):  # Chebyshev ball is a separable square
        acc = dil.copy()
        for d in range(1, eps + 1):
            shifted = np.zeros_like(dil)
            src = [slice(None)] * 2
            dst = [slice(None)] * 2
            src[axis] = slice(d, None)
            dst[axis] = slice(None, -d)
            shifted[tuple(dst)] = dil[tuple(src)]
            acc |= shifted
            shifted = np.zeros_like(dil)
            src[axis] = slice(None, -d)
            dst[axis] = slice(d, None)
            shifted[tuple(dst)] = dil[tuple(src)]
            acc |= shifted
        dil = acc
    return int((gt & dil).sum()), int(gt.sum())
