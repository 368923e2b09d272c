"""Stabilizers of MDS-built AME states, pushing of Pauli strings, minimal class
weights and the search for incompressible strings.

For prime q the state ``sum_v |v G>`` is fixed by ``X**g_l`` for every row
``g_l`` of G and by ``Z**h_l`` for every row of the parity check H. Two Pauli
strings act identically on the state iff they differ by a product of these,
so a string ``M`` with exponent vectors ``(m_x, m_z)`` has the realizations
``(m_x + aG, m_z + bH)``. Its minimal class weight is the smallest support of
such a pair.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterator, NamedTuple

import numpy as np

from . import linalg
from .codes import AffineCoset, LinearCode, max_joint_zeros, mds_generator, parity_check, span
from .errors import DEFAULT_BUDGET, BudgetExceeded, ConstructionError, UnsupportedError
from .field import GaloisField, get_field, is_prime
from .pauli import PauliString
from .states import SparseState, build_ame

MAX_SITES = 10


@dataclass(frozen=True, eq=False)
class StabilizerSet:
    """The ``n`` generators of the stabilizer group of ``build_ame(code)``.

    ``generators[:k]`` are the X-type strings from the rows of G, the rest the
    Z-type strings from the rows of H.
    """

    code: LinearCode
    parity: np.ndarray = dc_field(repr=False)
    state: SparseState = dc_field(repr=False)
    generators: tuple[PauliString, ...] = dc_field(repr=False)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def q(self) -> int:
        return self.code.q

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def field(self) -> GaloisField:
        return self.code.field

    def product(self, alpha) -> PauliString:
        """``S(alpha) = prod_l s_l**alpha_l`` (generators in order)."""
        alpha = [int(a) for a in alpha]
        if len(alpha) != self.n:
            raise ValueError(f"need {self.n} exponents")
        out = PauliString.identity(self.n, self.q)
        for s, a in zip(self.generators, alpha):
            out = out * s**a
        return out

    def syndrome(self, x, z) -> np.ndarray:
        """``(x H^T, z G^T)``; zero exactly for members of the stabilizer group."""
        x = np.asarray(x, dtype=np.int64)
        z = np.asarray(z, dtype=np.int64)
        return np.concatenate([(x @ self.parity.T) % self.q, (z @ self.code.generator.T) % self.q], axis=-1)

    def contains(self, p: PauliString) -> bool:
        """Whether ``p`` equals a stabilizer product up to global phase."""
        return not np.any(self.syndrome(p.x, p.z))

    @functools.cached_property
    def _kernels(self) -> dict[int, tuple[np.ndarray, np.ndarray]]:
        # For every allowed support T (bitmask): vectors u, zero on T, such
        # that m_x is pushable into T iff m_x . u = 0 for all X-vectors u (same for Z).
        out = {}
        f, n = self.field, self.n
        g, h = self.code.generator, self.parity
        for mask in range(1 << n):
            rest = [i for i in range(n) if not mask >> i & 1]
            kx = np.zeros((n, 0), dtype=np.int64)
            kz = np.zeros((n, 0), dtype=np.int64)
            if rest:
                for mat, name in ((g, "x"), (h, "z")):
                    ker = linalg.right_kernel(mat[:, rest], f)
                    emb = np.zeros((n, ker.shape[0]), dtype=np.int64)
                    emb[rest, :] = ker.T
                    if name == "x":
                        kx = emb
                    else:
                        kz = emb
            out[mask] = (kx, kz)
        return out

    def pushable(self, xs: np.ndarray, zs: np.ndarray, mask: int) -> np.ndarray:
        """Boolean per row: can ``(xs[i], zs[i])`` be pushed into the sites of ``mask``."""
        kx, kz = self._kernels[mask]
        q = self.q
        ok = ~np.any((xs @ kx) % q, axis=1)
        ok &= ~np.any((zs @ kz) % q, axis=1)
        return ok


def state_stabilizers(code: LinearCode) -> StabilizerSet:
    """Generators ``X**g_l`` and ``Z**h_l``, checked against the state."""
    if not is_prime(code.q):
        raise UnsupportedError(f"stabilizers are only built for prime q (got {code.q})")
    if not code.is_standard_form:
        code = code.standard_form()
    h = parity_check(code)
    state = build_ame(code)
    zero = (0,) * code.n
    gens = [PauliString(code.q, tuple(int(v) for v in row), zero) for row in code.generator]
    gens += [PauliString(code.q, zero, tuple(int(v) for v in row)) for row in h]
    for s in gens:
        if s.apply(state) != state:
            raise ConstructionError(f"{s} does not stabilize the state")
    for a, b in itertools.combinations(gens, 2):
        if not a.commutes(b):
            raise ConstructionError(f"generators {a} and {b} do not commute")
    return StabilizerSet(code, h, state, tuple(gens))


@functools.lru_cache(maxsize=64)
def stabilizers_for(n: int, q: int, paper_compat: bool = True) -> StabilizerSet:
    """Cached :func:`state_stabilizers` of the Singleton-array code for ``(n, q)``."""
    return state_stabilizers(mds_generator(n, get_field(q, paper_compat)))


def _check_shape(m: PauliString, stab: StabilizerSet):
    if (m.n, m.q) != (stab.n, stab.q):
        raise ValueError("Pauli string does not match the stabilizer set")


def push(m: PauliString, target, stab: StabilizerSet) -> PauliString | None:
    """Realization of ``m`` supported inside ``target`` (0-indexed sites), or ``None``.

    Solves ``(m_x + a G)|rest = 0`` and ``(m_z + b H)|rest = 0`` over GF(q)
    and returns ``m * S(a, b)`` with its phase.
    """
    _check_shape(m, stab)
    target = set(int(t) for t in target)
    rest = [i for i in range(stab.n) if i not in target]
    f = stab.field
    if not rest:
        return m
    mx = np.array(m.x, dtype=np.int64)
    mz = np.array(m.z, dtype=np.int64)
    a = linalg.solve_left(stab.code.generator[:, rest], f.neg(mx[rest]), f)
    if a is None:
        return None
    b = linalg.solve_left(stab.parity[:, rest], f.neg(mz[rest]), f)
    if b is None:
        return None
    return m * stab.product(np.concatenate([a, b]))


class ClassWeight(NamedTuple):
    weight: int
    realization: PauliString


def min_class_weight(m: PauliString, stab: StabilizerSet, budget: int = DEFAULT_BUDGET) -> ClassWeight:
    """Smallest support over ``{m S}``: try site subsets by increasing size."""
    _check_shape(m, stab)
    n = stab.n
    if n > MAX_SITES:
        raise BudgetExceeded("subset search", 2**n, 2**MAX_SITES)
    for size in range(n + 1):
        for target in itertools.combinations(range(n), size):
            r = push(m, target, stab)
            if r is not None:
                return ClassWeight(size, r)
    raise AssertionError("full support is always feasible")  # pragma: no cover


def class_weight_from_joint_zeros(m: PauliString, stab: StabilizerSet,
                                  budget: int = DEFAULT_BUDGET) -> int:
    """``n - i_max`` for the cosets ``C + m_x`` and ``C_perp + m_z``."""
    _check_shape(m, stab)
    f = stab.field
    a = AffineCoset(f, stab.code.generator, np.array(m.x))
    b = AffineCoset(f, stab.parity, np.array(m.z))
    return stab.n - max_joint_zeros(a, b, budget)


def class_weight_brute_force(m: PauliString, stab: StabilizerSet,
                             budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight over all ``q**n`` stabilizer products, one by one."""
    _check_shape(m, stab)
    total = stab.q**stab.n
    if total * stab.n > budget:
        raise BudgetExceeded("stabilizer-product enumeration", total * stab.n, budget)
    f = stab.field
    xs = span(stab.code.generator, f)
    zs = span(stab.parity, f)
    rx = (xs + np.array(m.x)) % stab.q
    rz = (zs + np.array(m.z)) % stab.q
    best = stab.n
    for row in rx:
        w = np.count_nonzero((rz != 0) | (row != 0)[None, :], axis=1).min()
        best = min(best, int(w))
    return best


def class_weights(xs, zs, stab: StabilizerSet, max_size: int | None = None) -> np.ndarray:
    """Vectorised minimal class weights for rows of exponent arrays.

    Rows still unresolved after subsets of size ``max_size`` get ``max_size + 1``.
    """
    xs = np.atleast_2d(np.asarray(xs, dtype=np.int64))
    zs = np.atleast_2d(np.asarray(zs, dtype=np.int64))
    n = stab.n
    if max_size is None:
        max_size = n
    out = np.full(len(xs), max_size + 1, dtype=np.int64)
    todo = np.ones(len(xs), dtype=bool)
    for size in range(max_size + 1):
        for target in itertools.combinations(range(n), size):
            if not todo.any():
                return out
            mask = sum(1 << t for t in target)
            idx = np.flatnonzero(todo)
            ok = stab.pushable(xs[idx], zs[idx], mask)
            out[idx[ok]] = size
            todo[idx[ok]] = False
    return out


def single_type_incompressible(m: PauliString, stab: StabilizerSet) -> bool:
    """Is an X-only or Z-only string of weight ``((n//2) + 1)//2`` incompressible?"""
    _check_shape(m, stab)
    want = (stab.n // 2 + 1) // 2
    if any(m.x) and any(m.z):
        raise ValueError("string must contain only X or only Z factors")
    if m.weight != want:
        raise ValueError(f"string must have weight {want}, got {m.weight}")
    return min_class_weight(m, stab).weight == m.weight


def _site_pairs(q: int) -> np.ndarray:
    return np.array([(x, z) for x in range(q) for z in range(q) if (x, z) != (0, 0)], dtype=np.int64)


def canonical_candidates(n: int, q: int, weight: int, chunk: int = 1 << 16
                         ) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """All weight-``weight`` exponent pairs up to scalar multiples, in lexicographic order.

    Supports come in ``itertools.combinations`` order; on each support the
    per-site ``(x, z)`` pairs run lexicographically, with the first site's
    pair scaled so its first nonzero entry is 1.
    """
    pairs = _site_pairs(q)
    first = np.array([p for p in pairs if p[np.flatnonzero(p)[0]] == 1], dtype=np.int64)
    for support in itertools.combinations(range(n), weight):
        if weight == 0:
            yield np.zeros((1, n), dtype=np.int64), np.zeros((1, n), dtype=np.int64)
            continue
        dims = (len(first),) + (len(pairs),) * (weight - 1)
        total = math.prod(dims)
        for start in range(0, total, chunk):
            idx = np.unravel_index(np.arange(start, min(start + chunk, total)), dims)
            xs = np.zeros((len(idx[0]), n), dtype=np.int64)
            zs = np.zeros_like(xs)
            for pos, (site, sel) in enumerate(zip(support, idx)):
                table = first if pos == 0 else pairs
                xs[:, site] = table[sel, 0]
                zs[:, site] = table[sel, 1]
            yield xs, zs


def iter_incompressible(stab: StabilizerSet, target_w: int,
                        budget: int = DEFAULT_BUDGET) -> Iterator[PauliString]:
    """Stream canonical strings of weight ``target_w .. ceil(n/2)`` with class weight ``target_w``."""
    n, q = stab.n, stab.q
    hi = n - n // 2
    spent = 0
    for w in range(max(target_w, 0), hi + 1):
        for xs, zs in canonical_candidates(n, q, w):
            spent += len(xs) * max(1, math.comb(n, target_w))
            if spent > budget:
                raise BudgetExceeded("incompressible-string search", spent, budget)
            if target_w == 0:
                weights = class_weights(xs, zs, stab, max_size=0)
            else:
                # class weight >= target_w iff nothing fits into target_w - 1 sites
                lower = np.zeros(len(xs), dtype=bool)
                for sub in itertools.combinations(range(n), target_w - 1):
                    lower |= stab.pushable(xs, zs, sum(1 << t for t in sub))
                weights = np.where(lower, target_w - 1, target_w)
                if w > target_w:
                    keep = np.flatnonzero(weights == target_w)
                    exact = class_weights(xs[keep], zs[keep], stab, max_size=target_w)
                    weights[keep] = exact
            for i in np.flatnonzero(weights == target_w):
                yield PauliString(q, tuple(xs[i]), tuple(zs[i]))


def search_incompressible(n: int, q: int, target_w: int, first: bool = False,
                          paper_compat: bool = True, budget: int = DEFAULT_BUDGET) -> list[PauliString]:
    """Canonical Pauli strings whose class has minimal weight ``target_w``."""
    if not is_prime(q):
        raise UnsupportedError(f"the search runs on prime q only (got {q})")
    stab = stabilizers_for(n, q, paper_compat)
    found = []
    for m in iter_incompressible(stab, target_w, budget):
        found.append(m)
        if first:
            break
    return found
