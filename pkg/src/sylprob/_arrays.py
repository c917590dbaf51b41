"""Vectorized helpers over element arrays.

An element array is a 2-d integer array with one permutation image per row.
Row composition follows the package convention (left operand first).
"""

from __future__ import annotations

import numpy as np

_CHUNK_CELLS = 1 << 22


def dtype_for(degree: int):
    if degree <= 256:
        return np.uint8
    if degree <= 65536:
        return np.uint16
    return np.int32


def as_array(perms, degree: int) -> np.ndarray:
    arr = np.array(list(perms), dtype=dtype_for(degree))
    return arr.reshape(-1, degree)


def compose_with(A: np.ndarray, b) -> np.ndarray:
    """Rows of ``A`` followed by the single permutation ``b``."""
    return np.asarray(b, dtype=A.dtype)[A]


def compose_rows(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Row-wise ``A[r]`` then ``B[r]``."""
    return np.take_along_axis(B, A.astype(np.intp), axis=1)


def inverse_rows(A: np.ndarray) -> np.ndarray:
    out = np.empty_like(A)
    idx = np.broadcast_to(np.arange(A.shape[1], dtype=A.dtype), A.shape)
    np.put_along_axis(out, A.astype(np.intp), idx, axis=1)
    return out


def conjugate_by(A: np.ndarray, x) -> np.ndarray:
    """Rows ``x^-1 * a * x`` for each row ``a``."""
    x = np.asarray(x, dtype=np.intp)
    xinv = np.empty_like(x)
    xinv[x] = np.arange(len(x))
    return x[A[:, xinv]].astype(A.dtype)


def conjugate_rows_of(x, A: np.ndarray) -> np.ndarray:
    """``a^-1 * x * a`` for each row ``a``: the fixed element conjugated by every row."""
    Ainv = inverse_rows(A).astype(np.intp)
    x = np.asarray(x, dtype=np.intp)
    return np.take_along_axis(A, x[Ainv], axis=1)


def row_keys(A: np.ndarray) -> np.ndarray:
    A = np.ascontiguousarray(A)
    return A.view(np.dtype((np.void, A.dtype.itemsize * A.shape[1]))).ravel()


def isin_rows(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if len(A) == 0 or len(B) == 0:
        return np.zeros(len(A), dtype=bool)
    return np.isin(row_keys(A), row_keys(B))


def fingerprint(A: np.ndarray) -> bytes:
    """Order-independent key of a set of rows."""
    return np.sort(row_keys(A)).tobytes()


def identity_mask(A: np.ndarray) -> np.ndarray:
    return (A == np.arange(A.shape[1], dtype=A.dtype)).all(axis=1)


def power_rows(A: np.ndarray, k: int) -> np.ndarray:
    result = np.broadcast_to(np.arange(A.shape[1], dtype=A.dtype), A.shape).copy()
    base = A
    while k:
        if k & 1:
            result = compose_rows(result, base)
        k >>= 1
        if k:
            base = compose_rows(base, base)
    return result


def centralizing_mask(A: np.ndarray, x) -> np.ndarray:
    """Rows of ``A`` commuting with ``x``."""
    x = np.asarray(x, dtype=np.intp)
    out = np.empty(len(A), dtype=bool)
    step = max(1, _CHUNK_CELLS // max(1, A.shape[1]))
    for s in range(0, len(A), step):
        blk = A[s:s + step]
        out[s:s + step] = (blk[:, x] == x[blk]).all(axis=1)
    return out


def commute_matrix(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Boolean ``|X| x |Y|`` matrix with ``M[i, j]`` true iff ``X[i]`` and ``Y[j]`` commute."""
    n = X.shape[1]
    out = np.empty((len(X), len(Y)), dtype=bool)
    if len(X) == 0 or len(Y) == 0:
        return out
    step = max(1, _CHUNK_CELLS // (len(Y) * n))
    Yi = Y.astype(np.intp)
    for s in range(0, len(X), step):
        xb = X[s:s + step]
        xy = Y[:, xb.astype(np.intp)].transpose(1, 0, 2)  # x then y
        yx = xb[:, Yi]  # y then x
        out[s:s + step] = (xy == yx).all(axis=2)
    return out


def commuting_pairs(X: np.ndarray, Y: np.ndarray) -> int:
    return int(commute_matrix(X, Y).sum())


def element_orders(A: np.ndarray) -> np.ndarray:
    """Order of each row, from the cycle lengths of every point."""
    n = A.shape[1]
    out = np.empty(len(A), dtype=np.int64)
    step = max(1, (_CHUNK_CELLS // 4) // max(1, n))
    ident = np.arange(n, dtype=np.intp)
    for s in range(0, len(A), step):
        Ai = A[s:s + step].astype(np.intp)
        lengths = np.zeros(Ai.shape, dtype=np.int64)
        cur = np.broadcast_to(ident, Ai.shape).copy()
        for k in range(1, n + 1):
            cur = np.take_along_axis(Ai, cur, axis=1)
            lengths[(cur == ident) & (lengths == 0)] = k
            if (lengths > 0).all():
                break
        out[s:s + step] = np.lcm.reduce(lengths, axis=1)
    return out
