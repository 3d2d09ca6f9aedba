"""Hot enumeration loops.

Two implementations of each kernel live here: a numba ``@njit`` version and
a vectorised numpy version.  ``SANDTILE_DISABLE_NUMBA=1`` (or a missing
numba install) selects numpy.  Both work in int64, so callers must check
:func:`fits_int64` first and fall back to exact Python integers otherwise.
"""

import os

import numpy as np

try:
    import numba as nb

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SANDTILE_DISABLE_NUMBA", "") not in ("1", "true", "yes")

# headroom below 2**63 for sums of a few products
INT64_SAFE = 2 ** 62

# below these sizes the compiled kernels lose to numpy once JIT start-up
# is counted, so the numpy path is used even when numba is enabled
MIN_NUMBA_BOX = 1 << 14
MIN_NUMBA_MINORS = 512


def njit(*args, **kwargs):
    if HAVE_NUMBA:
        return nb.njit(*args, **kwargs)
    return lambda func: func


def fits_int64(bound):
    return bound < INT64_SAFE


# -- integer points of a half-open parallelepiped ---------------------------
#
# A point p lies in the region iff u = sgn(det) * adj(G) @ (p - anchor)
# satisfies, per generator i,  0 <= u_i < |det|  (closed below)  or
# 0 < u_i <= |det|  (closed above).  ``lo_closed[i]`` is 1 for closed below.


@njit(cache=True)
def _box_points_numba(adj, absdet, lo_closed, anchor, lo, hi):
    k = lo.shape[0]
    cap = int(absdet)
    out = np.empty((max(cap, 1), k), dtype=np.int64)
    found = 0
    p = lo.copy()
    diff = np.empty(k, dtype=np.int64)
    while True:
        for j in range(k):
            diff[j] = p[j] - anchor[j]
        ok = True
        for i in range(k):
            u = 0
            for j in range(k):
                u += adj[i, j] * diff[j]
            if lo_closed[i]:
                if u < 0 or u >= absdet:
                    ok = False
                    break
            else:
                if u <= 0 or u > absdet:
                    ok = False
                    break
        if ok:
            if found < cap:
                for j in range(k):
                    out[found, j] = p[j]
            found += 1
        # odometer, last coordinate fastest -> lexicographic order
        j = k - 1
        while j >= 0:
            p[j] += 1
            if p[j] <= hi[j]:
                break
            p[j] = lo[j]
            j -= 1
        if j < 0:
            break
    return out[: min(found, cap)], found


def _box_points_numpy(adj, absdet, lo_closed, anchor, lo, hi, chunk=1 << 18):
    k = lo.shape[0]
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    sizes = [len(a) for a in axes]
    total = int(np.prod(sizes))
    keep = []
    found = 0
    closed = lo_closed.astype(bool)[:, None]
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total), dtype=np.int64)
        idx = np.unravel_index(flat, sizes)
        pts = np.stack([ax[i] for ax, i in zip(axes, idx)], axis=1)
        u = adj @ (pts - anchor).T
        inside = np.where(closed, (u >= 0) & (u < absdet), (u > 0) & (u <= absdet)).all(axis=0)
        found += int(inside.sum())
        keep.append(pts[inside])
    if not keep:
        return np.empty((0, k), dtype=np.int64), 0
    return np.concatenate(keep), found


def box_points(adj, absdet, lo_closed, anchor, lo, hi):
    """Integer points of ``[lo, hi]`` inside the oriented region, lexicographic.

    Returns ``(points, count)``; ``count`` is the true number of hits even if
    it exceeds ``absdet`` (which would signal a bug upstream).
    """
    args = (
        np.asarray(adj, dtype=np.int64),
        np.int64(absdet),
        np.asarray(lo_closed, dtype=np.int64),
        np.asarray(anchor, dtype=np.int64),
        np.asarray(lo, dtype=np.int64),
        np.asarray(hi, dtype=np.int64),
    )
    if args[4].shape[0] == 0:
        return np.empty((1, 0), dtype=np.int64), 1
    if USE_NUMBA and np.prod(args[5] - args[4] + 1, dtype=np.float64) >= MIN_NUMBA_BOX:
        return _box_points_numba(*args)
    return _box_points_numpy(*args)


# -- maximal minors -----------------------------------------------------------


@njit(cache=True)
def _minors_numba(A, combos):
    r = A.shape[0]
    out = np.empty(combos.shape[0], dtype=np.int64)
    M = np.empty((r, r), dtype=np.int64)
    for t in range(combos.shape[0]):
        for i in range(r):
            for j in range(r):
                M[i, j] = A[i, combos[t, j]]
        sign = 1
        prev = 1
        zero = False
        for k in range(r - 1):
            if M[k, k] == 0:
                swap = -1
                for i in range(k + 1, r):
                    if M[i, k] != 0:
                        swap = i
                        break
                if swap < 0:
                    zero = True
                    break
                for j in range(r):
                    tmp = M[k, j]
                    M[k, j] = M[swap, j]
                    M[swap, j] = tmp
                sign = -sign
            pivot = M[k, k]
            for i in range(k + 1, r):
                for j in range(k + 1, r):
                    M[i, j] = (M[i, j] * pivot - M[i, k] * M[k, j]) // prev
                M[i, k] = 0
            prev = pivot
        out[t] = 0 if zero else sign * M[r - 1, r - 1]
    return out


def _minors_numpy(A, combos):
    # batched Bareiss over the leading axis
    r = A.shape[0]
    M = A[:, combos].transpose(1, 0, 2).copy()  # (t, r, r)
    t = M.shape[0]
    sign = np.ones(t, dtype=np.int64)
    prev = np.ones(t, dtype=np.int64)
    zero = np.zeros(t, dtype=bool)
    rows = np.arange(t)
    for k in range(r - 1):
        col = M[:, k:, k]
        need = col[:, 0] == 0
        nz = col != 0
        has = nz.any(axis=1)
        zero |= ~has
        swap = k + np.argmax(nz, axis=1)
        do = need & has
        if do.any():
            sel = rows[do]
            top = M[sel, k, :].copy()
            M[sel, k, :] = M[sel, swap[do], :]
            M[sel, swap[do], :] = top
            sign[do] = -sign[do]
        pivot = M[:, k, k].copy()
        pivot[zero] = 1
        sub = M[:, k + 1 :, k + 1 :] * pivot[:, None, None] - M[:, k + 1 :, k, None] * M[:, k, None, k + 1 :]
        M[:, k + 1 :, k + 1 :] = sub // prev[:, None, None]
        M[:, k + 1 :, k] = 0
        prev = pivot
    out = sign * M[:, r - 1, r - 1]
    out[zero] = 0
    return out


def maximal_minors(A, combos):
    """Determinants of the column-submatrices ``A[:, combo]`` for each row of combos."""
    A = np.asarray(A, dtype=np.int64)
    combos = np.asarray(combos, dtype=np.int64)
    if combos.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    if A.shape[0] == 0:
        return np.ones(combos.shape[0], dtype=np.int64)
    if USE_NUMBA and combos.shape[0] >= MIN_NUMBA_MINORS:
        return _minors_numba(A, combos)
    return _minors_numpy(A, combos)
