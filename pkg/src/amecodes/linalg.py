"""Dense linear algebra over a :class:`~amecodes.field.GaloisField`.

Matrices are 2-D integer arrays of field labels. Everything is exact
Gauss-Jordan elimination; the sizes in this package never exceed ~10x10.
"""
from __future__ import annotations

import numpy as np

from .field import GaloisField


def as_matrix(mat, field: GaloisField) -> np.ndarray:
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.size and (a.min() < 0 or a.max() >= field.q):
        raise ValueError(f"matrix entries must be labels in [0, {field.q})")
    return a


def rref(mat, field: GaloisField) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = as_matrix(mat, field)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = field.mul(field.inv(int(a[r, c])), a[r])
        for j in range(rows):
            if j != r and a[j, c]:
                a[j] = field.sub(a[j], field.mul(int(a[j, c]), a[r]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, field: GaloisField) -> int:
    return len(rref(mat, field)[1])


def det(mat, field: GaloisField) -> int:
    """Determinant of a square matrix by elimination."""
    a = as_matrix(mat, field)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
            d = int(field.neg(d))
        piv = int(a[c, c])
        d = int(field.mul(d, piv))
        inv = int(field.inv(piv))
        for j in range(c + 1, n):
            if a[j, c]:
                f = int(field.mul(a[j, c], inv))
                a[j] = field.sub(a[j], field.mul(f, a[c]))
    return d


def right_kernel(mat, field: GaloisField) -> np.ndarray:
    """Basis (as rows) of ``{u : mat @ u = 0}``."""
    a = as_matrix(mat, field)
    cols = a.shape[1]
    r, pivots = rref(a, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = field.neg(int(r[i, f]))
    return basis


def solve_left(mat, b, field: GaloisField) -> np.ndarray | None:
    """Some ``x`` with ``x @ mat == b``, or ``None`` if the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    a = as_matrix(mat, field)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    k, n = a.shape
    if b.shape[0] != n:
        raise ValueError("right-hand side has the wrong length")
    aug = np.concatenate([a.T, b.reshape(-1, 1)], axis=1)
    r, pivots = rref(aug, field)
    if k in pivots:
        return None
    x = np.zeros(k, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, k]
    return x


def in_rowspace(v, mat, field: GaloisField) -> bool:
    a = as_matrix(mat, field)
    if a.shape[0] == 0:
        return not np.any(v)
    return solve_left(a, v, field) is not None


def inverse(mat, field: GaloisField) -> np.ndarray:
    a = as_matrix(mat, field)
    n = a.shape[0]
    r, pivots = rref(np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1), field)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return r[:, n:]
