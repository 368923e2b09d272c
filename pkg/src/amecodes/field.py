"""Arithmetic in GF(p^m) on integer labels.

An element is stored as the integer ``label = sum(c_i * p**i)`` where
``sum(c_i x**i)`` is its polynomial representative modulo the field's
irreducible polynomial. For GF(4) with ``x^2 = x + 1`` this gives the
familiar labelling 0, 1, x, x+1 -> 0, 1, 2, 3, so field labels can be used
directly as qudit levels.

All arithmetic goes through precomputed ``q x q`` tables, which means the
operators accept plain ints as well as integer numpy arrays (broadcasting
via fancy indexing).
"""
from __future__ import annotations

import functools
import itertools
from typing import Sequence

import numpy as np

from .errors import FieldError

MAX_ORDER = 32

# Moduli and primitive elements used for the worked examples and the
# Singleton-array catalogue. Polynomials are ascending coefficient tuples.
PAPER_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),  # 1 + x + x^2
    (2, 3): (1, 0, 1, 1),  # 1 + x^2 + x^3
    (3, 2): (2, 1, 1),  # 2 + x + x^2
}
PAPER_PRIMITIVE = {2: 1, 3: 2, 4: 2, 5: 3, 7: 3, 8: 2, 9: 3, 11: 2}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise :class:`FieldError` otherwise."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                raise FieldError(f"q={q} is not a prime power")
            return p, m
    raise FieldError(f"q={q} is not a prime power")  # pragma: no cover


# -- polynomials over GF(p), ascending coefficient lists ----------------------

def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(_trim(a)) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] * inv_lead % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        _trim(a)
    return a


def _polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim([c % p for c in poly])
    m = len(poly) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_polymod(poly, divisor, p)):
                return False
    return True


def find_irreducible(p: int, m: int, paper_compat: bool = True) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree ``m`` over GF(p), ascending coefficients.

    With ``paper_compat`` the moduli of the reference tables are returned for
    GF(4), GF(8) and GF(9). Otherwise (and for every other field) the result
    is the first irreducible when the lower coefficients are read as a base-p
    integer, i.e. the polynomial with the smallest label.
    """
    if not is_prime(p) or m < 1:
        raise FieldError(f"invalid field parameters p={p}, m={m}")
    if paper_compat and (p, m) in PAPER_IRREDUCIBLE:
        return PAPER_IRREDUCIBLE[(p, m)]
    if m == 1:
        return (0, 1)
    for label in range(p**m):
        low = [(label // p**i) % p for i in range(m)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


class GaloisField:
    """The finite field GF(p^m).

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree.
    irreducible : sequence of int, optional
        Ascending coefficients of the monic modulus (length ``m + 1``).
    primitive : int, optional
        Label of the primitive element used for log/antilog tables.

    Use :func:`get_field` to obtain cached instances by order.
    """

    def __init__(self, p: int, m: int = 1, irreducible=None, primitive=None,
                 paper_compat: bool = True):
        if not is_prime(p) or m < 1:
            raise FieldError(f"invalid field parameters p={p}, m={m}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"GF({q}) exceeds the supported order {MAX_ORDER}")
        if irreducible is None:
            irreducible = find_irreducible(p, m, paper_compat)
        irreducible = tuple(int(c) % p for c in irreducible)
        if len(irreducible) != m + 1 or irreducible[-1] != 1:
            raise FieldError(f"modulus {irreducible} is not monic of degree {m}")
        if m > 1 and not is_irreducible(irreducible, p):
            raise FieldError(f"modulus {irreducible} is reducible over GF({p})")
        self.p, self.m, self.q = p, m, q
        self.irreducible = irreducible
        self.paper_compat = paper_compat

        polys = [self.poly(a) for a in range(q)]
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a, b in itertools.product(range(q), repeat=2):
            add[a, b] = self.label([(x + y) % p for x, y in zip(polys[a], polys[b])])
            prod = _polymod(_polymul(polys[a], polys[b], p), irreducible, p) if m > 1 else \
                [polys[a][0] * polys[b][0] % p]
            mul[a, b] = self.label(prod)
        self._add, self._mul = add, mul
        self._neg = np.array([int(np.nonzero(add[a] == 0)[0][0]) for a in range(q)])

        if primitive is None:
            if paper_compat and q in PAPER_PRIMITIVE:
                primitive = PAPER_PRIMITIVE[q]
            else:
                primitive = next(g for g in range(1, q) if self._order(g) == q - 1)
        if self._order(primitive) != q - 1:
            raise FieldError(f"{primitive} is not a primitive element of GF({q})")
        self.primitive = int(primitive)

        exp = np.empty(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = int(mul[x, self.primitive])
        self._exp, self._log = exp, log
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self._inv = inv

    def _order(self, g: int) -> int:
        if not 0 < g < self.q:
            return 0
        x, k = g, 1
        while x != 1:
            x = int(self._mul[x, g])
            k += 1
            if k > self.q:
                return 0
        return k

    # -- representations ------------------------------------------------------
    def poly(self, a: int) -> tuple[int, ...]:
        """Ascending polynomial coefficients (the base-p digits) of label ``a``."""
        return tuple((int(a) // self.p**i) % self.p for i in range(self.m))

    def label(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs[: self.m]))

    def tuple_repr(self, a: int) -> str:
        """Digits of the ascending coefficients, e.g. ``'01'`` for x in GF(4)."""
        return "".join(str(c) for c in self.poly(a))

    def format(self, a: int, order: str = "ascending") -> str:
        """Polynomial string of ``a``; prime fields print the integer itself."""
        a = int(a)
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in enumerate(self.poly(a)):
            if c == 0:
                continue
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(var if c == 1 else f"{c}{var}")
        if not terms:
            return "0"
        if order == "descending":
            terms.reverse()
        return "+".join(terms)

    def format_modulus(self) -> str:
        """Modulus as in the reference tables, e.g. ``'1+x^2+x^3'`` or ``'5'``."""
        if self.m == 1:
            return str(self.p)
        terms = []
        for i, c in enumerate(self.irreducible):
            if c == 0:
                continue
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(str(c) if i == 0 else (var if c == 1 else f"{c}{var}"))
        return "+".join(terms)

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- arithmetic (ints or integer arrays) ----------------------------------
    def add(self, a, b):
        return self._add[a, b]

    def sub(self, a, b):
        return self._add[a, self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise FieldError("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a, self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        a = int(a)
        if a == 0:
            if e < 0:
                raise FieldError("inverse of zero")
            return 1 if e == 0 else 0
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return int(self._log[a])

    def exp(self, i: int) -> int:
        return int(self._exp[i % (self.q - 1)])

    def dot(self, u, v) -> int:
        """Inner product of two label vectors."""
        return int(self.sum(self.mul(np.asarray(u), np.asarray(v))))

    def sum(self, values, axis=None):
        """Field sum along ``axis`` (``None`` sums a flattened array)."""
        arr = np.asarray(values, dtype=np.int64)
        if axis is None:
            arr = arr.reshape(-1)
            axis = 0
        arr = np.moveaxis(arr, axis, 0)
        out = np.zeros(arr.shape[1:], dtype=np.int64)
        for row in arr:
            out = self._add[out, row]
        return out

    def matmul(self, a, b):
        """Matrix product over the field (2-D label arrays)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for t in range(a.shape[1]):
            out = self._add[out, self._mul[a[:, t:t + 1], b[t:t + 1, :]]]
        return out

    @property
    def add_table(self) -> np.ndarray:
        return self._add.copy()

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul.copy()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "q": self.q,
            "irreducible": list(self.irreducible),
            "primitive": self.primitive,
            "add_table": self._add.tolist(),
            "mul_table": self._mul.tolist(),
        }

    def table_rows(self) -> list[tuple[str, str, str]]:
        """Rows ``(tuple, polynomial, level)`` for every element, in label order."""
        return [(self.tuple_repr(a), self.format(a, "descending"), str(a)) for a in range(self.q)]

    def __repr__(self):
        return f"GaloisField(p={self.p}, m={self.m}, irreducible={self.irreducible}, primitive={self.primitive})"


@functools.lru_cache(maxsize=None)
def get_field(q: int, paper_compat: bool = True) -> GaloisField:
    """Cached :class:`GaloisField` of order ``q``."""
    p, m = prime_power(q)
    return GaloisField(p, m, paper_compat=paper_compat)


def find_primitive(field: GaloisField, paper_compat: bool = True) -> int:
    """Primitive element: the reference choice where one is pinned, else the smallest label."""
    if paper_compat and field.q in PAPER_PRIMITIVE:
        return PAPER_PRIMITIVE[field.q]
    return next(g for g in range(1, field.q) if field._order(g) == field.q - 1)


def field_from_json(data: dict) -> GaloisField:
    """Rebuild a field from :meth:`GaloisField.to_json` output and check its tables."""
    f = GaloisField(int(data["p"]), int(data["m"]), irreducible=data["irreducible"],
                    primitive=int(data["primitive"]))
    if f.q != int(data["q"]):
        raise FieldError("inconsistent order in field description")
    for key, table in (("add_table", f._add), ("mul_table", f._mul)):
        if key in data and not np.array_equal(np.asarray(data[key]), table):
            raise FieldError(f"{key} does not match the field defined by the modulus")
    return f
