"""Linear codes over GF(q): Singleton arrays, MDS generators, parity checks,
distances and the joint-zero count of two affine cosets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from . import linalg
from .errors import DEFAULT_BUDGET, BudgetExceeded, ConstructionError, UnsupportedError
from .field import GaloisField

# Largest min(k, n-k) for which is_mds enumerates every square submatrix.
MDS_SUBMATRIX_LIMIT = 4


@dataclass(frozen=True)
class SingletonArray:
    """Triangular Cauchy-type array over GF(q).

    ``rows[i]`` is row ``i + 1``; row ``i + 1`` has ``q - i`` entries. Entry
    ``(i, j)`` (1-indexed, both >= 2) equals ``a_{i+j-3}`` with
    ``a_t = 1 / (1 - gamma**t)``, so row 2 reads ``1, a_1, ..., a_{q-2}``.
    """

    field: GaloisField
    rows: tuple[tuple[int, ...], ...]
    extended: bool = False

    @property
    def q(self) -> int:
        return self.field.q

    def a(self, t: int) -> int:
        f = self.field
        return int(f.inv(f.sub(1, f.pow(f.primitive, t))))

    def fits(self, k: int, c: int) -> bool:
        return k <= len(self.rows) and all(len(self.rows[i]) >= c for i in range(k))

    def block(self, k: int, c: int) -> np.ndarray:
        """Top-left ``k x c`` rectangle."""
        if not self.fits(k, c):
            raise ConstructionError(f"S_{self.q} has no {k}x{c} top-left block")
        return np.array([self.rows[i][:c] for i in range(k)], dtype=np.int64)

    def symbol(self, i: int, j: int) -> str:
        """Entry ``(i, j)`` (0-indexed) as ``'1'`` or ``'a_t'``."""
        if i == 0 or j == 0:
            return "1"
        if self.extended and i == 2 and j == 2:
            return "a_1"
        return f"a_{i + j - 1}"

    def to_json(self) -> dict:
        return {"q": self.q, "primitive": self.field.primitive, "extended": self.extended,
                "rows": [list(r) for r in self.rows]}


def singleton_array(field: GaloisField) -> SingletonArray:
    """The Singleton array ``S_q`` for the field's primitive element."""
    q = field.q
    sa = SingletonArray(field, ())
    a = {t: sa.a(t) for t in range(1, q - 1)}
    rows = [tuple([1] * q)]
    for i in range(2, q + 1):
        rows.append((1,) + tuple(a[i + j - 3] for j in range(2, q + 2 - i)))
    return SingletonArray(field, tuple(rows))


def extended_singleton_array_4(field: GaloisField) -> SingletonArray:
    """``S_4'``: the GF(4) array with ``a_1`` appended to its third row."""
    if field.q != 4:
        raise UnsupportedError("the extended Singleton array is only provided for q = 4")
    base = singleton_array(field)
    rows = list(base.rows)
    rows[2] = rows[2] + (base.a(1),)
    return SingletonArray(field, tuple(rows), extended=True)


@dataclass(frozen=True)
class LinearCode:
    """Linear ``[n, k]`` code given by a ``k x n`` generator matrix of labels."""

    field: GaloisField
    generator: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        g = linalg.as_matrix(self.generator, self.field)
        g.setflags(write=False)
        object.__setattr__(self, "generator", g)
        if g.shape[0] > g.shape[1]:
            raise ConstructionError("k > n")

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def is_standard_form(self) -> bool:
        return np.array_equal(self.generator[:, : self.k], np.eye(self.k, dtype=np.int64))

    @property
    def redundancy(self) -> np.ndarray:
        """The block ``A`` of a standard-form generator ``[I | A]``."""
        return self.standard_form().generator[:, self.k:]

    def standard_form(self) -> "LinearCode":
        if self.is_standard_form:
            return self
        r, pivots = linalg.rref(self.generator, self.field)
        if len(pivots) < self.k:
            raise ConstructionError(f"generator has rank {len(pivots)} < k = {self.k}")
        if pivots != list(range(self.k)):
            raise ConstructionError("generator has no standard form without permuting columns")
        return LinearCode(self.field, r)

    def encode(self, message) -> np.ndarray:
        v = np.asarray(message, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.k:
            raise ValueError(f"message length {v.shape[0]} != k = {self.k}")
        return self.field.matmul(v.reshape(1, -1), self.generator)[0]

    def codewords(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        """All ``q**k`` codewords as rows, messages in lexicographic order."""
        return span(self.generator, self.field, budget)

    def parity_check(self) -> np.ndarray:
        return parity_check(self)

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.parity_check())

    def to_json(self) -> dict:
        d = min_distance(self) if self.q**self.k <= 10**6 else None
        return {"n": self.n, "k": self.k, "q": self.q, "G": self.generator.tolist(),
                "H": self.parity_check().tolist(), "is_mds": is_mds(self), "d": d}


def span(mat, field: GaloisField, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Every linear combination of the rows of ``mat``."""
    mat = np.asarray(mat, dtype=np.int64)
    k, n = mat.shape
    count = field.q**k
    if count * max(n, 1) * max(k, 1) > budget:
        raise BudgetExceeded("codeword enumeration", count * n * k, budget)
    msgs = np.array(list(itertools.product(range(field.q), repeat=k)), dtype=np.int64).reshape(count, k)
    if field.m == 1:
        return (msgs @ mat) % field.q
    out = np.zeros((count, n), dtype=np.int64)
    for r in range(k):
        out = field.add(out, field.mul(msgs[:, r:r + 1], mat[r][None, :]))
    return out


def mds_generator(n: int, field: GaloisField) -> LinearCode:
    """Standard-form ``[n, n//2, ceil(n/2)+1]_q`` generator from the Singleton array.

    Requires ``q >= n - 1``; for ``q = 4`` the extended array also allows ``n = 6``.
    """
    if n < 2:
        raise ConstructionError("n must be at least 2")
    k = n // 2
    arr = extended_singleton_array_4(field) if field.q == 4 else singleton_array(field)
    if not arr.fits(k, n - k):
        raise ConstructionError(
            f"no [{n},{k},{n - k + 1}] MDS code from the Singleton array of GF({field.q}); need q >= n - 1")
    a = arr.block(k, n - k)
    return LinearCode(field, np.concatenate([np.eye(k, dtype=np.int64), a], axis=1))


def parity_check(code: LinearCode) -> np.ndarray:
    """``H = [-A^T | I]`` for a standard-form generator ``[I | A]``."""
    std = code.standard_form()
    f = code.field
    k, n = code.k, code.n
    a = std.generator[:, k:]
    h = np.concatenate([f.neg(a.T), np.eye(n - k, dtype=np.int64)], axis=1).reshape(n - k, n)
    assert not np.any(f.matmul(code.generator, h.T)), "G H^T != 0"
    return h


def singular_submatrix(a, field: GaloisField) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First singular square submatrix of ``a`` as ``(rows, cols)``, or ``None``."""
    a = np.asarray(a, dtype=np.int64)
    k, c = a.shape
    for size in range(1, min(k, c) + 1):
        for rows in itertools.combinations(range(k), size):
            for cols in itertools.combinations(range(c), size):
                if linalg.det(a[np.ix_(rows, cols)], field) == 0:
                    return rows, cols
    return None


def is_mds(code: LinearCode) -> bool:
    """MDS test via nonsingularity of every square submatrix of ``A``.

    For ``min(k, n-k)`` above :data:`MDS_SUBMATRIX_LIMIT` the minimum distance
    is compared with the Singleton bound instead.
    """
    k, n = code.k, code.n
    if k == 0 or k == n:
        return True
    if min(k, n - k) <= MDS_SUBMATRIX_LIMIT:
        return singular_submatrix(code.redundancy, code.field) is None
    return min_distance(code) == n - k + 1


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum Hamming weight of a nonzero codeword (exhaustive)."""
    if code.k == 0:
        return code.n + 1
    words = code.codewords(budget)[1:]
    return int(np.count_nonzero(words, axis=1).min())


@dataclass(frozen=True)
class AffineCoset:
    """The set ``{v @ generator + translation}`` over a field."""

    field: GaloisField
    generator: np.ndarray
    translation: np.ndarray

    def words(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        base = span(self.generator, self.field, budget)
        t = np.asarray(self.translation, dtype=np.int64).reshape(1, -1)
        return self.field.add(base, t)


_POPCOUNT = np.array([bin(i).count("1") for i in range(1 << 12)], dtype=np.int64)


def zero_masks(words: np.ndarray) -> np.ndarray:
    """Bitmask of the zero positions of each row (bit ``i`` for position ``i``)."""
    weights = 1 << np.arange(words.shape[1], dtype=np.int64)
    return ((words == 0).astype(np.int64) * weights).sum(axis=1)


def max_joint_zeros(a: AffineCoset, b: AffineCoset, budget: int = DEFAULT_BUDGET) -> int:
    """Largest number of positions where a word of ``a`` and a word of ``b`` are both zero.

    Both cosets are enumerated once and reduced to their distinct zero
    patterns; the pattern pairs are then compared exhaustively.
    """
    n = np.asarray(a.translation).shape[-1]
    if n != np.asarray(b.translation).shape[-1]:
        raise ValueError("cosets have different lengths")
    if n > 12:
        raise UnsupportedError("max_joint_zeros supports n <= 12")
    ma = np.unique(zero_masks(a.words(budget)))
    mb = np.unique(zero_masks(b.words(budget)))
    if ma.size * mb.size > budget:
        raise BudgetExceeded("zero-pattern comparison", ma.size * mb.size, budget)
    return int(_POPCOUNT[ma[:, None] & mb[None, :]].max())


def iter_codewords(code: LinearCode) -> Iterator[tuple[int, ...]]:
    for w in code.codewords():
        yield tuple(int(x) for x in w)


def latex_matrix(code: LinearCode) -> str:
    """Bracketed ``[I | A]`` layout with a vertical bar after column ``k``."""
    k, n = code.k, code.n
    f = code.field
    spec = "c" * k + "|" + "c" * (n - k)
    lines = [f"G_{{{k} \\times {n}}} =\\left[  \\begin{{array}}{{{spec}}}"]
    for row in code.generator:
        lines.append(" & ".join(f.format(int(x), "descending") for x in row) + " \\\\")
    lines.append(" \\end{array} \\right]")
    return "\n".join(lines)
