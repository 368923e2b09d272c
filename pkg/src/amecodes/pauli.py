"""Generalized Pauli strings on n qudits of prime dimension q.

A string is stored in the standard form ``omega**phase * X**x * Z**z`` with
``X|j> = |j+1>`` and ``Z|j> = omega**j |j>``, so that ``Z X = omega X Z``.
Phases are exact exponents in Z_q.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedError
from .field import is_prime
from .states import SparseState

_FACTOR = re.compile(r"^(?:X(\d*))?(?:Z(\d*))?$")
_PHASE = re.compile(r"^\s*w\^(-?\d+)\s*\*?\s*")


@dataclass(frozen=True)
class PauliString:
    q: int
    x: tuple[int, ...]
    z: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if not is_prime(self.q):
            raise UnsupportedError(f"Pauli strings need prime q, got {self.q}")
        x = tuple(int(v) % self.q for v in self.x)
        z = tuple(int(v) % self.q for v in self.z)
        if len(x) != len(z):
            raise ValueError("x and z exponent vectors differ in length")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "phase", int(self.phase) % self.q)

    @classmethod
    def identity(cls, n: int, q: int) -> "PauliString":
        return cls(q, (0,) * n, (0,) * n)

    @classmethod
    def single(cls, n: int, q: int, site: int, x: int = 0, z: int = 0) -> "PauliString":
        xs, zs = [0] * n, [0] * n
        xs[site], zs[site] = x, z
        return cls(q, tuple(xs), tuple(zs))

    @classmethod
    def parse(cls, text: str, q: int) -> "PauliString":
        """Read ``'w^2 I.X.Z2.X1Z3'``; ``'⊗'`` is accepted as separator and ``1`` as identity."""
        phase = 0
        m = _PHASE.match(text)
        if m:
            phase = int(m.group(1))
            text = text[m.end():]
        factors = [f.strip() for f in re.split(r"[.⊗]", text.strip())]
        xs, zs = [], []
        for f in factors:
            if f in ("I", "1"):
                xs.append(0)
                zs.append(0)
                continue
            fm = _FACTOR.match(f)
            if not f or not fm:
                raise ValueError(f"cannot parse Pauli factor {f!r}")
            xe, ze = fm.group(1), fm.group(2)
            xs.append(0 if xe is None else int(xe or 1))
            zs.append(0 if ze is None else int(ze or 1))
        return cls(q, tuple(xs), tuple(zs), phase)

    def __str__(self):
        out = []
        for x, z in zip(self.x, self.z):
            f = ""
            if x:
                f += "X" + (str(x) if x != 1 else "")
            if z:
                f += "Z" + (str(z) if z != 1 else "")
            out.append(f or "I")
        body = ".".join(out)
        return f"w^{self.phase} {body}" if self.phase else body

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, (x, z) in enumerate(zip(self.x, self.z)) if x or z)

    @property
    def weight(self) -> int:
        return len(self.support)

    @property
    def vector(self) -> np.ndarray:
        """``(x | z)`` as one length-2n array."""
        return np.array(self.x + self.z, dtype=np.int64)

    def _check(self, other: "PauliString"):
        if (self.n, self.q) != (other.n, other.q):
            raise ValueError("Pauli strings of different shape")

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Product in standard form: moving ``Z**z`` right past ``X**x'`` costs ``omega**(z.x')``."""
        self._check(other)
        q = self.q
        cross = sum(a * b for a, b in zip(self.z, other.x))
        return PauliString(q,
                           tuple(a + b for a, b in zip(self.x, other.x)),
                           tuple(a + b for a, b in zip(self.z, other.z)),
                           self.phase + other.phase + cross)

    def dagger(self) -> "PauliString":
        xz = sum(a * b for a, b in zip(self.x, self.z))
        return PauliString(self.q, tuple(-a for a in self.x), tuple(-b for b in self.z),
                           -self.phase + xz)

    def __pow__(self, m: int) -> "PauliString":
        base = self if m >= 0 else self.dagger()
        m = abs(int(m))
        out = PauliString.identity(self.n, self.q)
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    power = __pow__

    def symplectic(self, other: "PauliString") -> int:
        """``z.x' - x.z'`` mod q, so that ``A B = omega**(A.symplectic(B)) B A``."""
        self._check(other)
        s = sum(a * b for a, b in zip(self.z, other.x)) - sum(a * b for a, b in zip(self.x, other.z))
        return s % self.q

    def commutes(self, other: "PauliString") -> bool:
        return self.symplectic(other) == 0

    def up_to_phase(self) -> "PauliString":
        return PauliString(self.q, self.x, self.z)

    def apply(self, state: SparseState) -> SparseState:
        """Act on a sparse state: Z phases on the incoming words, then the X shift."""
        if (state.n, state.q) != (self.n, self.q):
            raise ValueError("Pauli string and state have different shape")
        z = np.array(self.z, dtype=np.int64)
        x = np.array(self.x, dtype=np.int64)
        phases = state.phases + state.words @ z + self.phase
        return SparseState(state.n, state.q, (state.words + x) % self.q, phases)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "phase": self.phase, "x": list(self.x), "z": list(self.z)}

    @classmethod
    def from_json(cls, data: dict) -> "PauliString":
        p = cls(int(data["q"]), tuple(data["x"]), tuple(data["z"]), int(data.get("phase", 0)))
        if "n" in data and int(data["n"]) != p.n:
            raise ValueError("inconsistent n in Pauli JSON")
        return p


def symplectic(a: PauliString, b: PauliString) -> int:
    return a.symplectic(b)


def apply(op: PauliString, state: SparseState) -> SparseState:
    return op.apply(state)
