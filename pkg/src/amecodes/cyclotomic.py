"""Exact integer combinations of q-th roots of unity."""
from __future__ import annotations

import cmath
import functools

import numpy as np


def _divisors(q: int) -> list[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials (ascending) when ``den`` is monic and divides ``num``."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the ``q``-th cyclotomic polynomial."""
    if q < 1:
        raise ValueError("q must be positive")
    num = [-1] + [0] * (q - 1) + [1]
    den = [1]
    for d in _divisors(q)[:-1]:
        den = _polymul(den, list(cyclotomic_polynomial(d)))
    return tuple(_polydiv_exact(num, den))


def _reduce(coeffs, q: int) -> list[int]:
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    c = [int(x) for x in coeffs]
    for i in range(len(c) - 1, deg - 1, -1):
        f = c[i]
        if f:
            for j, p in enumerate(phi):
                c[i - deg + j] -= f * p
    return c[:deg]


class CyclotomicInt:
    """``sum(coeffs[k] * omega**k)`` with ``omega = exp(2*pi*i/q)``.

    Equality and :meth:`is_zero` are exact: the coefficient vector is reduced
    modulo the ``q``-th cyclotomic polynomial.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs=None):
        if q < 1:
            raise ValueError("q must be positive")
        c = np.zeros(q, dtype=np.int64)
        if coeffs is not None:
            coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1)
            if coeffs.size > q:
                raise ValueError("more than q coefficients")
            c[: coeffs.size] = coeffs
        self.q = q
        self.coeffs = tuple(int(x) for x in c)

    @classmethod
    def root(cls, q: int, k: int = 0, mult: int = 1) -> "CyclotomicInt":
        c = [0] * q
        c[k % q] = mult
        return cls(q, c)

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicInt.root(self.q, 0, other)
        if not isinstance(other, CyclotomicInt) or other.q != self.q:
            raise TypeError("cyclotomic integers of different order")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.q, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        out = [0] * self.q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % self.q] += a * b
        return CyclotomicInt(self.q, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInt":
        return CyclotomicInt(self.q, [self.coeffs[-k % self.q] for k in range(self.q)])

    def reduced(self) -> tuple[int, ...]:
        """Canonical coefficients modulo the cyclotomic polynomial."""
        return tuple(_reduce(self.coeffs, self.q))

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __complex__(self):
        return complex(sum(c * cmath.exp(2j * cmath.pi * k / self.q) for k, c in enumerate(self.coeffs)))

    def __repr__(self):
        return f"CyclotomicInt(q={self.q}, coeffs={self.coeffs})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*w^{k}")
        return " + ".join(terms) if terms else "0"
