"""Independent reference implementations used only by the tests.

Everything here works on dense matrices or plain Python polynomials and
shares no code with the package.
"""
from __future__ import annotations

import itertools

import numpy as np


# -- GF(p^m) by schoolbook polynomial arithmetic ---------------------------------

def poly_of(label, p, m):
    return [(label // p**i) % p for i in range(m)]


def label_of(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


def poly_mulmod(a, b, modulus, p):
    """Product of two ascending coefficient lists reduced by a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (2 * m)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for k, mk in enumerate(modulus):
                prod[deg - m + k] = (prod[deg - m + k] - c * mk) % p
    return prod[:m]


def gf_mul(a, b, p, m, modulus):
    return label_of(poly_mulmod(poly_of(a, p, m), poly_of(b, p, m), modulus, p), p)


def gf_add(a, b, p, m):
    return label_of([(x + y) % p for x, y in zip(poly_of(a, p, m), poly_of(b, p, m))], p)


def det_leibniz(mat, mul, add, neg):
    """Determinant over any field given its operations, by the permutation expansion."""
    n = len(mat)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = 1
        for r in range(n):
            term = mul(term, int(mat[r][perm[r]]))
        total = add(total, neg(term) if inversions % 2 else term)
    return total


# -- dense qudit operators --------------------------------------------------------

def omega(q):
    return np.exp(2j * np.pi / q)


def shift(q):
    x = np.zeros((q, q), dtype=complex)
    for j in range(q):
        x[(j + 1) % q, j] = 1
    return x


def clock(q):
    return np.diag([omega(q)**j for j in range(q)])


def dense_pauli(q, x, z, phase=0):
    out = np.array([[omega(q)**phase]], dtype=complex)
    for a, b in zip(x, z):
        site = np.linalg.matrix_power(shift(q), a) @ np.linalg.matrix_power(clock(q), b)
        out = np.kron(out, site)
    return out


def dense_state(n, q, words, phases):
    """Unnormalised vector with the first site most significant."""
    v = np.zeros(q**n, dtype=complex)
    for w, ph in zip(words, phases):
        idx = 0
        for s in w:
            idx = idx * q + int(s)
        v[idx] += omega(q)**int(ph)
    return v


def reduced_density(vec, n, q, keep):
    """Partial trace onto the sites in ``keep`` (sorted)."""
    psi = vec.reshape((q,) * n)
    rest = [i for i in range(n) if i not in keep]
    psi = np.transpose(psi, list(keep) + rest).reshape(q**len(keep), -1)
    return psi @ psi.conj().T


def is_k_uniform_dense(vec, n, q, k):
    rho_norm = np.vdot(vec, vec).real
    for keep in itertools.combinations(range(n), k):
        rho = reduced_density(vec, n, q, list(keep)) / rho_norm
        if not np.allclose(rho, np.eye(q**k) / q**k, atol=1e-9):
            return False
    return True


def apply_pauli_tensor(vec, n, q, x, z, phase=0):
    """Apply omega^phase X^x Z^z to a dense vector by axis rolls and phases."""
    psi = vec.reshape((q,) * n).astype(complex)
    w = omega(q)
    for site in range(n):
        if z[site]:
            shape = [1] * n
            shape[site] = q
            psi = psi * (w ** (z[site] * np.arange(q))).reshape(shape)
        if x[site]:
            psi = np.roll(psi, x[site], axis=site)
    return (w ** phase) * psi.reshape(-1)


def kl_distance_dense(basis, n, q, max_d=None):
    """Largest d such that every Pauli P of weight < d has <b_i|P|b_j> = c(P) delta_ij.

    ``basis`` holds normalised dense vectors. Pure brute force.
    """
    max_d = n + 1 if max_d is None else max_d
    pairs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    mat = np.array(basis)
    for w in range(0, max_d):
        for support in itertools.combinations(range(n), w):
            for choice in itertools.product(pairs, repeat=w):
                x, z = [0] * n, [0] * n
                for s, (a, b) in zip(support, choice):
                    x[s], z[s] = a, b
                images = np.array([apply_pauli_tensor(v, n, q, x, z) for v in basis])
                gram = mat.conj() @ images.T
                if not np.allclose(gram, gram[0, 0] * np.eye(len(basis)), atol=1e-9):
                    return w
    return max_d
