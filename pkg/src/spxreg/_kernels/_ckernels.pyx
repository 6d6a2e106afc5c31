# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the per-pixel kernels.

Must stay bit-identical to ``_pykernels``; the test suite cross-checks
both backends on random inputs.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


cdef inline Py_ssize_t _find(cnp.int64_t[::1] parent, Py_ssize_t i) noexcept nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


cdef inline void _union(cnp.int64_t[::1] parent, Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    cdef Py_ssize_t ra = _find(parent, a)
    cdef Py_ssize_t rb = _find(parent, b)
    if ra == rb:
        return
    if ra < rb:
        parent[rb] = ra
    else:
        parent[ra] = rb


def label_components(labels, int connectivity=4):
    """Connected components of equal-valued regions (4- or 8-connectivity),
    numbered 0..n-1 in row-major order of each component's first pixel.

    Classic two-pass: copy a provisional label from an already-visited
    equal-valued neighbor (left/up, plus the up diagonals for 8-conn),
    union only where two provisional labels meet.
    """
    if connectivity != 4 and connectivity != 8:
        raise ValueError("connectivity must be 4 or 8")
    cdef cnp.int64_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int64)
    cdef Py_ssize_t h = lab.shape[0], w = lab.shape[1]
    out_arr = np.empty((h, w), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] out = out_arr
    cdef cnp.int64_t[::1] parent = np.empty(h * w, dtype=np.int64)
    cdef Py_ssize_t x, y, n_prov = 0
    cdef cnp.int64_t v, cur
    cdef bint eight = connectivity == 8

    with nogil:
        for y in range(h):
            for x in range(w):
                v = lab[y, x]
                cur = -1
                if x > 0 and lab[y, x - 1] == v:
                    cur = out[y, x - 1]
                if y > 0:
                    if lab[y - 1, x] == v:
                        if cur < 0:
                            cur = out[y - 1, x]
                        else:
                            _union(parent, cur, out[y - 1, x])
                    if eight:
                        if x > 0 and lab[y - 1, x - 1] == v:
                            if cur < 0:
                                cur = out[y - 1, x - 1]
                            else:
                                _union(parent, cur, out[y - 1, x - 1])
                        if x + 1 < w and lab[y - 1, x + 1] == v:
                            if cur < 0:
                                cur = out[y - 1, x + 1]
                            else:
                                _union(parent, cur, out[y - 1, x + 1])
                if cur < 0:
                    cur = n_prov
                    parent[n_prov] = n_prov
                    n_prov += 1
                out[y, x] = cur

    ids_arr = np.full(n_prov, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] ids = ids_arr
    cdef Py_ssize_t next_id = 0, r
    with nogil:
        for y in range(h):
            for x in range(w):
                r = _find(parent, out[y, x])
                if ids[r] < 0:
                    ids[r] = next_id
                    next_id += 1
                out[y, x] = ids[r]
    return out_arr, int(next_id)


def boundary_mask(labels):
    """Pixels with a 4-neighbor of different value or on the image border."""
    cdef cnp.int64_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int64)
    cdef Py_ssize_t h = lab.shape[0], w = lab.shape[1]
    out_arr = np.zeros((h, w), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t x, y
    with nogil:
        for y in range(h):
            for x in range(w):
                if (x == 0 or y == 0 or x == w - 1 or y == h - 1
                        or lab[y, x] != lab[y, x - 1]
                        or lab[y, x] != lab[y, x + 1]
                        or lab[y, x] != lab[y - 1, x]
                        or lab[y, x] != lab[y + 1, x]):
                    out[y, x] = 1
    return out_arr


def transition_mask(labels):
    """One-sided label transitions (right/down), for boundary recall."""
    cdef cnp.int64_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int64)
    cdef Py_ssize_t h = lab.shape[0], w = lab.shape[1]
    out_arr = np.zeros((h, w), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t x, y
    with nogil:
        for y in range(h):
            for x in range(w):
                if x + 1 < w and lab[y, x] != lab[y, x + 1]:
                    out[y, x] = 1
                elif y + 1 < h and lab[y, x] != lab[y + 1, x]:
                    out[y, x] = 1
    return out_arr


def rasterize_convex(vx, vy, Py_ssize_t x0, Py_ssize_t y0,
                     Py_ssize_t w, Py_ssize_t h, double eps):
    """Mask of pixel centers inside or on a CCW convex polygon."""
    cdef double[::1] px = np.ascontiguousarray(vx, dtype=np.float64)
    cdef double[::1] py = np.ascontiguousarray(vy, dtype=np.float64)
    cdef Py_ssize_t m = px.shape[0]
    out_arr = np.ones((h, w), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef double ax, ay, bx, by, ex, ey, cx, cy
    with nogil:
        for k in range(m):
            ax = px[k]
            ay = py[k]
            bx = px[(k + 1) % m]
            by = py[(k + 1) % m]
            ex = bx - ax
            ey = by - ay
            for j in range(h):
                cy = y0 + j + 0.5
                for i in range(w):
                    if out[j, i]:
                        cx = x0 + i + 0.5
                        if ex * (cy - ay) - ey * (cx - ax) < -eps:
                            out[j, i] = 0
    return out_arr


def chebyshev_match(gt_boundary, pred_boundary, int eps):
    """(matched, total) ground-truth boundary pixels with a predicted
    boundary pixel within Chebyshev distance eps.

    Boundary maps are sparse, so scanning the (2 eps + 1)^2 window of
    each ground-truth pixel beats building a dilated map.
    """
    cdef cnp.uint8_t[:, ::1] gt = np.ascontiguousarray(gt_boundary, dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] pred = np.ascontiguousarray(pred_boundary, dtype=np.uint8)
    cdef Py_ssize_t h = gt.shape[0], w = gt.shape[1]
    cdef Py_ssize_t x, y, yy, xx, ylo, yhi, xlo, xhi
    cdef long matched = 0, total = 0
    cdef bint hit
    with nogil:
        for y in range(h):
            for x in range(w):
                if not gt[y, x]:
                    continue
                total += 1
                ylo = y - eps if y - eps > 0 else 0
                yhi = y + eps if y + eps < h - 1 else h - 1
                xlo = x - eps if x - eps > 0 else 0
                xhi = x + eps if x + eps < w - 1 else w - 1
                hit = False
                for yy in range(ylo, yhi + 1):
                    for xx in range(xlo, xhi + 1):
                        if pred[yy, xx]:
                            hit = True
                            break
                    if hit:
                        break
                if hit:
                    matched += 1
    return int(matched), int(total)
