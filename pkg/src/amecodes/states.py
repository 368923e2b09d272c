"""Sparse phased states, AME construction from MDS codes, uniformity checks and
the AME basis.

A :class:`SparseState` stores only its support words and a phase exponent per
word; every amplitude is ``omega**phase / sqrt(#terms)``. Field labels are used
directly as computational-basis levels.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from .codes import LinearCode, is_mds, singular_submatrix
from .cyclotomic import CyclotomicInt
from .errors import DEFAULT_BUDGET, BudgetExceeded, NotMDSError


def pack(words: np.ndarray, q: int) -> np.ndarray:
    """Base-q integer of each row, first site most significant."""
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1]
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return words @ weights


class SparseState:
    """Uniform-magnitude superposition ``sum_w omega**phase(w) |w>`` (unnormalised)."""

    def __init__(self, n: int, q: int, words, phases=None):
        words = np.array(words, dtype=np.int64).reshape(-1, n)
        if words.size and (words.min() < 0 or words.max() >= q):
            raise ValueError(f"word entries must lie in [0, {q})")
        phases = np.zeros(len(words), dtype=np.int64) if phases is None else \
            np.array(phases, dtype=np.int64).reshape(-1) % q
        if phases.shape[0] != words.shape[0]:
            raise ValueError("one phase per word required")
        keys = pack(words, q)
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if np.any(keys[1:] == keys[:-1]):
            raise ValueError("duplicate words in state")
        self.n, self.q = n, q
        self.words = words[order]
        self.phases = phases[order]
        self.keys = keys
        for arr in (self.words, self.phases, self.keys):
            arr.setflags(write=False)

    def __len__(self):
        return len(self.keys)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(x) for x in w): int(p) for w, p in zip(self.words, self.phases)}

    def __eq__(self, other):
        if not isinstance(other, SparseState):
            return NotImplemented
        return (self.n, self.q) == (other.n, other.q) and np.array_equal(self.keys, other.keys) \
            and np.array_equal(self.phases, other.phases)

    __hash__ = None

    def __repr__(self):
        return f"SparseState(n={self.n}, q={self.q}, terms={len(self)})"

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q,
                "terms": [{"word": [int(x) for x in w], "phase": int(p)}
                          for w, p in zip(self.words, self.phases)]}

    @classmethod
    def from_json(cls, data: dict) -> "SparseState":
        terms = data["terms"]
        return cls(int(data["n"]), int(data["q"]), [t["word"] for t in terms],
                   [t.get("phase", 0) for t in terms])


def build_ame(code: LinearCode) -> SparseState:
    """``sum_v |v G>`` over all messages ``v``: a minimal-support AME state."""
    if code.k != code.n // 2:
        raise NotMDSError(f"need k = n//2 = {code.n // 2}, got k = {code.k}")
    if not is_mds(code):
        witness = singular_submatrix(code.redundancy, code.field)
        raise NotMDSError("generator is not MDS", witness)
    return SparseState(code.n, code.q, code.codewords())


def min_pairwise_distance(state: SparseState) -> int:
    w = state.words
    best = state.n
    for i in range(len(w) - 1):
        best = min(best, int(np.count_nonzero(w[i + 1:] != w[i], axis=1).min()))
    return best


def non_uniform_subset(state: SparseState, k: int,
                       budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """First ``k``-subset ``S`` (0-indexed sites) whose marginal is not maximally mixed.

    For each ``S`` the terms are grouped by their restriction to the
    complement; the diagonal of the marginal counts each S-pattern, and every
    off-diagonal element is a cyclotomic sum over groups holding both
    patterns. Returns ``None`` when all subsets pass.
    """
    n, q = state.n, state.q
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    cost = len(state) * math.comb(n, k) * n
    if cost > budget:
        raise BudgetExceeded("k-uniformity check", cost, budget)
    total = len(state)
    if total % q**k:
        return tuple(range(k))
    expected = total // q**k
    for subset in itertools.combinations(range(n), k):
        rest = [i for i in range(n) if i not in subset]
        u = pack(state.words[:, list(subset)], q) if k else np.zeros(total, dtype=np.int64)
        pats, counts = np.unique(u, return_counts=True)
        if len(pats) != q**k or np.any(counts != expected):
            return subset
        g = pack(state.words[:, rest], q) if rest else np.zeros(total, dtype=np.int64)
        order = np.argsort(g, kind="stable")
        gs = g[order]
        bounds = np.flatnonzero(np.diff(gs)) + 1
        off: dict[tuple[int, int], list[int]] = {}
        for grp in np.split(order, bounds):
            if len(grp) < 2:
                continue
            for a, b in itertools.combinations(grp, 2):
                key = (int(u[a]), int(u[b])) if u[a] < u[b] else (int(u[b]), int(u[a]))
                lo, hi = (a, b) if u[a] < u[b] else (b, a)
                vec = off.setdefault(key, [0] * q)
                vec[(state.phases[lo] - state.phases[hi]) % q] += 1
        if any(not CyclotomicInt(q, v).is_zero() for v in off.values()):
            return subset
    return None


def is_k_uniform(state: SparseState, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    return non_uniform_subset(state, k, budget) is None


def verify_ame(state: SparseState, budget: int = DEFAULT_BUDGET) -> bool:
    """All marginals on ``n // 2`` sites are maximally mixed."""
    return is_k_uniform(state, state.n // 2, budget)


def inner_product(s1: SparseState, s2: SparseState) -> CyclotomicInt:
    """Unnormalised ``<s1|s2>``; divide by ``#terms`` for the normalised value."""
    if (s1.n, s1.q) != (s2.n, s2.q):
        raise ValueError("states live in different spaces")
    _, i1, i2 = np.intersect1d(s1.keys, s2.keys, assume_unique=True, return_indices=True)
    diff = (s2.phases[i2] - s1.phases[i1]) % s1.q
    return CyclotomicInt(s1.q, np.bincount(diff, minlength=s1.q))


def ame_basis_element(state: SparseState, a) -> SparseState:
    """``M(a)|state>`` with integer (mod q) shifts and phases, any q >= 2.

    ``M(a)`` puts ``Z**a_1 .. Z**a_k`` on the last ``k = n//2`` sites and
    ``X**a_{k+1} .. X**a_n`` on the last ``n - k`` sites. The X factor sits to
    the right in the operator product, so the shift is applied first.
    """
    n, q = state.n, state.q
    a = np.asarray(a, dtype=np.int64).reshape(-1)
    if a.shape[0] != n:
        raise ValueError(f"need {n} exponents, got {a.shape[0]}")
    k = n // 2
    shift = np.zeros(n, dtype=np.int64)
    shift[k:] = a[k:]
    zexp = np.zeros(n, dtype=np.int64)
    zexp[n - k:] = a[:k]
    words = (state.words + shift) % q
    phases = (state.phases + words @ zexp) % q
    return SparseState(n, q, words, phases)


_INDEX_NAMES = "ijlmrstuvw"


def closed_form(code: LinearCode, latex: bool = False) -> str:
    """Summation formula of :func:`build_ame` with symbolic message indices.

    Prime fields give e.g. ``Σ_{i,j,l=0}^{4} |i,j,l,i+j+l,i+2j+3l,i+3j+4l⟩``;
    extension fields sum over the element set and print coefficients as
    polynomials in ``x``.
    """
    f = code.field
    k = code.k
    names = list(_INDEX_NAMES[:k])
    entries = []
    for col in code.generator.T:
        parts = []
        for name, c in zip(names, col):
            c = int(c)
            if c == 0:
                continue
            if c == 1:
                parts.append(name)
            elif f.m == 1:
                parts.append(f"{c}{name}")
            else:
                coef = f.format(c, "descending")
                parts.append(f"({coef}) {name}" if "+" in coef else f"{coef} {name}")
        entries.append("+".join(parts) if parts else "0")
    ket = ",".join(entries)
    idx = ",".join(names)
    if f.m == 1:
        lo = f"{idx}=0"
        sup = f"^{{{f.q - 1}}}"
    else:
        elems = ",".join(f.format(a, "descending") for a in range(f.q))
        lo = f"{idx} \\in \\{{{elems}\\}}" if latex else f"{idx} ∈ {{{elems}}}"
        sup = ""
    if latex:
        return f"\\sum_{{{lo}}}{sup} |{ket}\\rangle"
    return f"Σ_{{{lo}}}{sup} |{ket}⟩"
