import itertools

import numpy as np
import pytest

from amecodes import linalg
from amecodes.codes import (AffineCoset, LinearCode, extended_singleton_array_4, is_mds,
                            latex_matrix, max_joint_zeros, mds_generator, min_distance,
                            parity_check, singleton_array, singular_submatrix, span)
from amecodes.errors import BudgetExceeded, ConstructionError, UnsupportedError
from amecodes.field import get_field

G65 = [[1, 0, 0, 1, 1, 1],
       [0, 1, 0, 1, 2, 3],
       [0, 0, 1, 1, 3, 4]]


def test_generator_6_5():
    code = mds_generator(6, get_field(5))
    assert code.generator.tolist() == G65
    assert code.is_standard_form


def test_generator_6_4_uses_extended_array():
    code = mds_generator(6, get_field(4))
    # rows of the 3x3 block: 1 1 1 / 1 x x+1 / 1 x+1 x
    assert code.generator[:, 3:].tolist() == [[1, 1, 1], [1, 2, 3], [1, 3, 2]]
    assert is_mds(code)
    assert min_distance(code) == 4


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11])
def test_singleton_blocks_are_superregular(q):
    f = get_field(q)
    arr = extended_singleton_array_4(f) if q == 4 else singleton_array(f)
    # every rectangle that fits: all square submatrices nonsingular
    for k in range(1, min(len(arr.rows), 4) + 1):
        c = len(arr.rows[k - 1])
        if c == 0:
            continue
        assert singular_submatrix(arr.block(k, c), f) is None


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 3), (4, 5), (5, 4), (6, 5), (6, 7), (7, 7),
                                 (8, 7), (8, 8), (6, 4), (9, 8), (10, 9), (10, 11)])
def test_mds_generators(n, q):
    code = mds_generator(n, get_field(q))
    h = parity_check(code)
    f = code.field
    assert not np.any(f.matmul(code.generator, h.T))
    assert linalg.rank(h, f) == n - n // 2
    if q**code.k <= 10**5:
        assert min_distance(code) == n - code.k + 1
    assert is_mds(code)


def test_dual_of_mds_is_mds():
    code = mds_generator(6, get_field(7))
    dual = code.dual()
    assert min_distance(dual) == 6 - dual.k + 1


@pytest.mark.parametrize("n,q", [(8, 5), (6, 3), (5, 3), (4, 2)])
def test_q_too_small(n, q):
    with pytest.raises(ConstructionError):
        mds_generator(n, get_field(q))


def test_extended_array_only_for_gf4():
    with pytest.raises(UnsupportedError):
        extended_singleton_array_4(get_field(5))


def test_non_mds_witness():
    f = get_field(5)
    code = LinearCode(f, [[1, 0, 1, 1], [0, 1, 1, 1]])
    assert not is_mds(code)
    rows, cols = singular_submatrix(code.redundancy, f)
    sub = code.redundancy[np.ix_(rows, cols)]
    assert linalg.det(sub, f) == 0
    assert min_distance(code) < 3


def test_standard_form_reduction():
    f = get_field(5)
    g = np.array(G65)
    mixed = f.add(g, np.vstack([g[1], np.zeros(6, dtype=np.int64), g[0]]))
    code = LinearCode(f, mixed).standard_form()
    assert code.generator.tolist() == G65


def test_encode_and_codewords():
    code = mds_generator(4, get_field(3))
    words = code.codewords()
    assert words.shape == (9, 4)
    assert np.array_equal(code.encode([1, 2]), words[5])
    with pytest.raises(BudgetExceeded):
        span(code.generator, code.field, budget=5)


def _joint_zeros_brute(a, b):
    best = 0
    for u in a.words():
        for v in b.words():
            best = max(best, int(np.sum((u == 0) & (v == 0))))
    return best


@pytest.mark.parametrize("seed", range(5))
def test_max_joint_zeros_against_pairs(seed):
    f = get_field(5)
    code = mds_generator(4, f)
    rng = np.random.default_rng(seed)
    a = AffineCoset(f, code.generator, rng.integers(0, 5, 4))
    b = AffineCoset(f, parity_check(code), rng.integers(0, 5, 4))
    assert max_joint_zeros(a, b) == _joint_zeros_brute(a, b)


def test_to_json_schema():
    data = mds_generator(4, get_field(3)).to_json()
    assert set(data) == {"n", "k", "q", "G", "H", "is_mds", "d"}
    assert data["d"] == 3 and data["is_mds"]


def test_latex_layout():
    text = latex_matrix(mds_generator(6, get_field(4)))
    assert "{ccc|ccc}" in text
    assert "0 & 1 & 0 & 1 & x & x+1 \\\\" in text


def test_array_entry_symbols():
    arr = singleton_array(get_field(8))
    assert [arr.symbol(1, j) for j in range(7)] == ["1"] + [f"a_{t}" for t in range(1, 7)]
    assert arr.symbol(3, 2) == "a_4"
    assert all(arr.rows[i][j] == arr.a(i + j - 1) for i in range(1, 7) for j in range(1, len(arr.rows[i])))
    # entry a_t == 1 / (1 - gamma**t)
    f = arr.field
    for t in range(1, 7):
        assert f.mul(arr.a(t), f.sub(1, f.pow(f.primitive, t))) == 1


def test_row_lengths():
    arr = singleton_array(get_field(7))
    assert [len(r) for r in arr.rows] == [7, 6, 5, 4, 3, 2, 1]
    assert list(itertools.chain(arr.rows[0])) == [1] * 7
