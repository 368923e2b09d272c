import itertools

import numpy as np
import pytest

from _oracles import dense_state, kl_distance_dense
from amecodes.cyclotomic import CyclotomicInt
from amecodes.errors import BudgetExceeded, ConstructionError
from amecodes.pauli import PauliString
from amecodes.qecc import (SyndromeTable, build_code, certify_distance, code_stabilizer_generators,
                           code_to_json, overlap, singleton_bound_ok, verify_knill_laflamme)
from amecodes.stabilizer import min_class_weight, stabilizers_for


def _codes(n, q, count, seed, paper_compat=True):
    stab = stabilizers_for(n, q, paper_compat)
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        m = PauliString(q, tuple(rng.integers(0, q, n)), tuple(rng.integers(0, q, n)))
        if stab.contains(m):
            continue
        out.append(build_code(stab, m))
    return out


def _dense_basis(code):
    vecs = [dense_state(code.n, code.q, s.words, s.phases) for s in code.basis]
    return [v / np.linalg.norm(v) for v in vecs]


@pytest.mark.parametrize("n,q,count", [(3, 3, 15), (4, 3, 15), (3, 5, 6), (4, 5, 4), (5, 5, 2)])
def test_certified_distance_matches_dense_oracle(n, q, count):
    for code in _codes(n, q, count, seed=n * q):
        d = certify_distance(code)
        assert d == kl_distance_dense(_dense_basis(code), n, q, max_d=d + 1)


@pytest.mark.parametrize("n,q", [(3, 3), (4, 3), (4, 5), (5, 5)])
def test_table_and_enumeration_agree(n, q):
    for code in _codes(n, q, 5, seed=11):
        for d in range(1, 4):
            a = verify_knill_laflamme(code, d, "table")
            b = verify_knill_laflamme(code, d, "enumerate")
            assert a.ok == b.ok


def test_witness_really_violates():
    for code in _codes(4, 5, 10, seed=5):
        d = certify_distance(code)
        rep = verify_knill_laflamme(code, d + 1)
        assert not rep and rep.witness.weight <= d
        p, shift = rep.witness, rep.shift
        if shift:
            # some m' gives a nonzero off-diagonal overlap
            assert any(not overlap(code, p, mp, shift).is_zero() for mp in range(code.q))
        else:
            vals = [overlap(code, p, mp, 0) for mp in range(code.q)]
            assert any(v != vals[0] for v in vals)


@pytest.mark.parametrize("n,q", [(2, 3), (4, 3), (3, 5), (4, 5)])
def test_syndrome_table_against_enumeration(n, q):
    stab = stabilizers_for(n, q)
    table = SyndromeTable(stab)
    best = {}
    pairs = [(a, b) for a in range(q) for b in range(q)]
    for choice in itertools.product(pairs, repeat=n):
        x = [c[0] for c in choice]
        z = [c[1] for c in choice]
        key = tuple(int(s) for s in stab.syndrome(x, z))
        w = sum(1 for c in choice if c != (0, 0))
        best[key] = min(best.get(key, n + 1), w)
    assert len(best) == q**n
    for key, w in best.items():
        assert table.weight(key) == w


def test_distance_equals_class_weight_even_n():
    for n, q in [(4, 3), (4, 5), (6, 5), (6, 7)]:
        for code in _codes(n, q, 20, seed=3):
            assert certify_distance(code) == code.distance


def test_stabilizer_m_is_refused():
    stab = stabilizers_for(4, 3)
    with pytest.raises(ConstructionError):
        build_code(stab, stab.generators[0])


def test_basis_orthonormal_and_code_stabilizers():
    stab = stabilizers_for(6, 5)
    code = build_code(stab, PauliString.parse("I.I.X.Z.I.Z", 5))
    assert code.distance == 2
    norm = CyclotomicInt.root(5, 0, 125)
    for i, j in itertools.combinations_with_replacement(range(5), 2):
        ip = overlap(code, PauliString.identity(6, 5), i, j - i)
        assert ip == (norm if i == j else CyclotomicInt(5))
    gens = code_stabilizer_generators(code)
    assert len(gens) == 5
    for g in gens:
        assert g.commutes(code.logical)


def test_singleton_bound_helper():
    assert singleton_bound_ok(8, 4) and not singleton_bound_ok(8, 5)
    assert singleton_bound_ok(7, 4) and not singleton_bound_ok(6, 4)


def test_budget_and_json():
    code = _codes(6, 5, 1, seed=1)[0]
    with pytest.raises(BudgetExceeded):
        verify_knill_laflamme(code, 3, "enumerate", budget=10)
    data = code_to_json(code)
    assert {"n", "q", "k", "G", "H", "M", "logical", "distance", "generators"} <= set(data)
    assert PauliString.from_json(data["logical"]) == code.logical


def test_realization_weight_equals_distance():
    stab = stabilizers_for(8, 7, False)
    m = PauliString.parse("I.I.I.Z.I.Z.Z.X", 7)
    code = build_code(stab, m)
    assert code.distance == 4 == code.realization.weight
    assert certify_distance(code) == 4
    assert min_class_weight(m**3, stab).weight == 4
