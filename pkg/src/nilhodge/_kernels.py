"""Batched exact integer determinants for the Weyl-group enumeration oracle.

``det_shifted(mats, points)`` returns ``det(I - lam * A)`` for every matrix
``A`` in the batch and every integer ``lam`` in ``points``, using
fraction-free (Bareiss) elimination in int64.  Two interchangeable backends:

* numba ``@njit`` loops (default when numba imports), and
* a pure numpy path vectorized across the batch.

Set ``NILHODGE_NUMBA=0`` to force the numpy path.  Entries stay small for
signed permutation matrices (Hadamard bound ``(sqrt(m) * (max|lam| + 1))**m``),
so int64 is exact for every size the oracle accepts.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("NILHODGE_NUMBA", "1") != "0"
BACKEND = "numba" if USE_NUMBA else "numpy"


def _det_shifted_py(mats, points, out):
    nmat, m, _ = mats.shape
    npts = points.shape[0]
    work = np.empty((m, m), dtype=np.int64)
    for g in range(nmat):
        for p in range(npts):
            lam = points[p]
            for i in range(m):
                for j in range(m):
                    work[i, j] = -lam * mats[g, i, j]
                work[i, i] += 1
            sign = 1
            prev = 1
            det = 0
            singular = False
            for k in range(m - 1):
                if work[k, k] == 0:
                    swap = -1
                    for i in range(k + 1, m):
                        if work[i, k] != 0:
                            swap = i
                            break
                    if swap < 0:
                        singular = True
                        break
                    for j in range(m):
                        tmp = work[k, j]
                        work[k, j] = work[swap, j]
                        work[swap, j] = tmp
                    sign = -sign
                pivot = work[k, k]
                for i in range(k + 1, m):
                    for j in range(k + 1, m):
                        work[i, j] = (work[i, j] * pivot - work[i, k] * work[k, j]) // prev
                prev = pivot
            if m == 0:
                det = 1
            elif not singular:
                det = sign * work[m - 1, m - 1]
            out[g, p] = det
    return out


if _HAVE_NUMBA:
    _det_shifted_jit = njit(cache=True)(_det_shifted_py)


def det_shifted_numba(mats: np.ndarray, points: np.ndarray) -> np.ndarray:
    if not _HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    points = np.ascontiguousarray(points, dtype=np.int64)
    out = np.empty((mats.shape[0], points.shape[0]), dtype=np.int64)
    return _det_shifted_jit(mats, points, out)


def det_shifted_numpy(mats: np.ndarray, points: np.ndarray) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64)
    points = np.asarray(points, dtype=np.int64)
    nmat, m, _ = mats.shape
    npts = points.shape[0]
    if m == 0:
        return np.ones((nmat, npts), dtype=np.int64)
    eye = np.eye(m, dtype=np.int64)
    M = (eye[None, None] - points[None, :, None, None] * mats[:, None]).reshape(nmat * npts, m, m)
    M = M.copy()
    batch = M.shape[0]
    sign = np.ones(batch, dtype=np.int64)
    prev = np.ones(batch, dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    rows = np.arange(batch)
    for k in range(m - 1):
        zero = alive & (M[:, k, k] == 0)
        if zero.any():
            idx = np.nonzero(zero)[0]
            below = M[idx, k + 1 :, k] != 0
            has = below.any(axis=1)
            alive[idx[~has]] = False
            idx, src = idx[has], below[has].argmax(axis=1) + k + 1
            rk = M[idx, k].copy()
            M[idx, k] = M[idx, src]
            M[idx, src] = rk
            sign[idx] = -sign[idx]
        pivot = np.where(alive, M[:, k, k], 1)
        sub = M[:, k + 1 :, k + 1 :]
        M[:, k + 1 :, k + 1 :] = (
            sub * pivot[:, None, None] - M[:, k + 1 :, k, None] * M[:, k, None, k + 1 :]
        ) // prev[:, None, None]
        prev = pivot
    det = np.where(alive, sign * M[rows, m - 1, m - 1], 0)
    return det.reshape(nmat, npts)


def det_shifted(mats: np.ndarray, points: np.ndarray) -> np.ndarray:
    """``out[g, p] = det(I - points[p] * mats[g])`` using the active backend."""
    if USE_NUMBA:
        return det_shifted_numba(mats, points)
    return det_shifted_numpy(mats, points)
