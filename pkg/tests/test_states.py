import itertools

import numpy as np
import pytest

from _oracles import dense_pauli, dense_state, is_k_uniform_dense
from amecodes.codes import LinearCode, mds_generator
from amecodes.cyclotomic import CyclotomicInt
from amecodes.errors import BudgetExceeded, NotMDSError
from amecodes.field import get_field
from amecodes.states import (SparseState, ame_basis_element, build_ame, closed_form, inner_product,
                             is_k_uniform, min_pairwise_distance, non_uniform_subset, verify_ame)

AME65 = "Σ_{i,j,l=0}^{4} |i,j,l,i+j+l,i+2j+3l,i+3j+4l⟩"


def _ame(n, q):
    return build_ame(mds_generator(n, get_field(q)))


def test_ame_6_5_closed_form_and_words():
    code = mds_generator(6, get_field(5))
    assert closed_form(code) == AME65
    state = build_ame(code)
    assert len(state) == 125
    want = {(i, j, l, (i + j + l) % 5, (i + 2 * j + 3 * l) % 5, (i + 3 * j + 4 * l) % 5)
            for i, j, l in itertools.product(range(5), repeat=3)}
    assert set(state.terms) == want
    assert verify_ame(state)


def test_ame_6_4_words_under_relabelling():
    state = _ame(6, 4)
    f = get_field(4)
    x, x1 = 2, 3

    def lin(*pairs):
        out = 0
        for c, v in pairs:
            out = f.add(out, f.mul(c, v))
        return int(out)

    want = {(i, j, l, lin((1, i), (1, j), (1, l)), lin((1, i), (x, j), (x1, l)),
             lin((1, i), (x1, j), (x, l)))
            for i, j, l in itertools.product(range(4), repeat=3)}
    assert set(state.terms) == want
    assert verify_ame(state)


def test_closed_form_small_and_latex():
    assert closed_form(mds_generator(2, get_field(3))) == "Σ_{i=0}^{2} |i,i⟩"
    latex = closed_form(mds_generator(6, get_field(5)), latex=True)
    assert latex.startswith("\\sum_{i,j,l=0}^{4}") and latex.endswith("\\rangle")


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 3), (4, 5), (5, 4), (6, 5), (6, 4), (7, 7),
                                 (8, 7), (8, 8), (6, 7), (8, 9), (8, 11), (8, 13)])
def test_support_distance_and_uniformity(n, q):
    state = _ame(n, q)
    assert len(state) == q**(n // 2)
    assert min_pairwise_distance(state) >= n - n // 2 + 1
    if q**(n // 2) * n <= 10**5:
        for k in range(n // 2 + 1):
            assert is_k_uniform(state, k)


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 3), (5, 4)])
def test_uniformity_matches_dense_marginals(n, q):
    state = _ame(n, q)
    vec = dense_state(n, q, state.words, state.phases)
    assert is_k_uniform_dense(vec, n, q, n // 2)
    # perturbed states: checker and dense marginals must agree
    rng = np.random.default_rng(n * 31 + q)
    for _ in range(20):
        words = state.words.copy()
        phases = state.phases.copy()
        i = rng.integers(len(words))
        if rng.random() < 0.5:
            phases[i] = (phases[i] + rng.integers(1, q)) % q
        else:
            words[i, rng.integers(n)] = rng.integers(q)
            if len({tuple(w) for w in words}) < len(words):
                continue
        s = SparseState(n, q, words, phases)
        v = dense_state(n, q, s.words, s.phases)
        assert is_k_uniform(s, n // 2) == is_k_uniform_dense(v, n, q, n // 2)


def test_epr_and_pure_site():
    epr = SparseState(2, 2, [[0, 0], [1, 1]])
    assert is_k_uniform(epr, 1)
    bad = SparseState(2, 2, [[0, 0], [0, 1]])
    # |0>|+>: both marginals are pure, the first failing subset is reported
    assert non_uniform_subset(bad, 1) == (0,)
    assert not is_k_uniform(SparseState(2, 2, [[0, 0], [1, 0]]), 1)


def test_phase_change_keeps_ame_and_deletion_breaks_it():
    state = _ame(6, 5)
    phases = state.phases.copy()
    phases[7] = 1
    assert verify_ame(SparseState(6, 5, state.words, phases))
    assert not verify_ame(SparseState(6, 5, state.words[1:], state.phases[1:]))


def test_non_mds_input_rejected():
    f = get_field(5)
    with pytest.raises(NotMDSError) as exc:
        build_ame(LinearCode(f, [[1, 0, 1, 1], [0, 1, 1, 1]]))
    assert exc.value.witness is not None


def test_budget_refusal():
    with pytest.raises(BudgetExceeded):
        is_k_uniform(_ame(8, 7), 4, budget=1000)


def test_inner_products():
    state = _ame(4, 3)
    assert inner_product(state, state) == CyclotomicInt.root(3, 0, 9)
    other = SparseState(4, 3, [[2, 2, 2, 1]])
    assert inner_product(state, other).is_zero()


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (4, 3)])
def test_basis_is_orthogonal(n, q):
    state = _ame(n, q)
    labels = list(itertools.product(range(q), repeat=n))
    basis = [ame_basis_element(state, a) for a in labels]
    norm = CyclotomicInt.root(q, 0, len(state))
    for i, b in enumerate(basis):
        assert inner_product(b, b) == norm
        for c in basis[i + 1:]:
            assert inner_product(b, c).is_zero()


def test_basis_sample_6_5():
    state = _ame(6, 5)
    rng = np.random.default_rng(2)
    for _ in range(500):
        a, b = rng.integers(0, 5, 6), rng.integers(0, 5, 6)
        ip = inner_product(ame_basis_element(state, a), ame_basis_element(state, b))
        assert ip.is_zero() == (not np.array_equal(a, b))


def test_basis_element_against_dense_operator():
    n, q = 4, 3
    state = _ame(n, q)
    vec = dense_state(n, q, state.words, state.phases)
    a = [1, 2, 2, 1]
    k = n // 2
    zs = [0] * (n - k) + a[:k]
    xs = [0] * k + a[k:]
    op = dense_pauli(q, [0] * n, zs) @ dense_pauli(q, xs, [0] * n)
    out = ame_basis_element(state, a)
    assert np.allclose(op @ vec, dense_state(n, q, out.words, out.phases))
    assert ame_basis_element(state, [0] * n) == state
    epr = SparseState(2, 2, [[0, 0], [1, 1]])
    assert set(ame_basis_element(epr, [0, 1]).terms) == {(0, 1), (1, 0)}
    with pytest.raises(ValueError):
        ame_basis_element(state, [1, 2])


def test_json_round_trip():
    state = _ame(4, 5)
    data = state.to_json()
    assert set(data) == {"n", "q", "terms"}
    assert SparseState.from_json(data) == state
