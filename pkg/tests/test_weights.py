import pytest
from hypothesis import given, strategies as st

import oracle
from aqcodes.cyclic import all_cyclic_codes, code_from_defset, dual, full_code, is_subcode, zero_code
from aqcodes.errors import EmptyDifference, LengthMismatch, ZeroCode
from aqcodes.weights import (
    WeightResult,
    bch_bound,
    cache_clear,
    enumerate_span,
    gray_steps,
    min_weight,
    relative_min_weight,
)

HAMMING = code_from_defset(7, 2, [1, 2, 4])
SIMPLEX = dual(HAMMING)


def bits(C):
    g = sum(c << i for i, c in enumerate(C.g.coeffs))
    return oracle.cyclic_span(g, C.n) if C.k else {0}


def qwords(C):
    rows = [tuple(int(x) for x in r) for r in C.generator_matrix]
    return oracle.qary_span(rows, C.q) if C.k else {(0,) * C.n}


def qwt(w):
    return sum(1 for x in w if x)


def test_min_weight_examples():
    w = min_weight(HAMMING)
    assert (w.value, w.exact, w.method) == (3, True, "exhaustive")
    assert min_weight(SIMPLEX).value == 4
    assert {oracle.popcount(x) for x in bits(SIMPLEX) if x} == {4}
    assert min_weight(full_code(9, 2)).value == 1
    with pytest.raises(ZeroCode):
        min_weight(zero_code(7, 2))


def test_relative_examples():
    hw, sw = bits(HAMMING), bits(SIMPLEX)
    assert len(hw - sw) == 8
    assert relative_min_weight(HAMMING, SIMPLEX).value == oracle.relative_weight(hw, sw) == 3
    with pytest.raises(EmptyDifference):
        relative_min_weight(HAMMING, HAMMING)
    assert relative_min_weight(full_code(7, 2), zero_code(7, 2)).value == 1
    with pytest.raises(LengthMismatch):
        relative_min_weight(HAMMING, full_code(15, 2))


def test_bch_bound_examples():
    assert bch_bound(code_from_defset(15, 2, [1, 2, 3, 4, 6, 8, 9, 12])) == 5
    assert bch_bound(full_code(15, 2)) == 1
    assert bch_bound(zero_code(15, 2)) == 16
    # runs wrap around n - 1 -> 0
    assert bch_bound(code_from_defset(7, 2, [0, 3, 5, 6])) == 4


@pytest.mark.parametrize("n", [3, 5, 7, 9, 15, 17])
def test_min_weight_matches_oracle_binary(n):
    for C in all_cyclic_codes(n, 2):
        if C.k:
            assert min_weight(C).value == oracle.min_weight(bits(C))


@pytest.mark.parametrize("n,q", [(4, 3), (5, 3), (8, 3), (10, 3), (4, 5), (6, 5), (6, 7)])
def test_min_weight_matches_oracle_qary(n, q):
    for C in all_cyclic_codes(n, q):
        if C.k and C.k <= 7:
            assert min_weight(C).value == min(qwt(w) for w in qwords(C) if any(w))


@pytest.mark.parametrize("n", [7, 9, 15])
def test_relative_matches_oracle_binary(n):
    codes = [C for C in all_cyclic_codes(n, 2)]
    words = {C.defset: bits(C) for C in codes}
    for A in codes:
        for B in codes:
            if is_subcode(A, B):
                continue
            expect = oracle.relative_weight(words[A.defset], words[B.defset])
            assert relative_min_weight(A, B).value == expect


@pytest.mark.parametrize("n,q", [(8, 3), (4, 5)])
def test_relative_matches_oracle_qary(n, q):
    codes = [C for C in all_cyclic_codes(n, q) if C.k <= 6]
    words = {C.defset: qwords(C) for C in codes}
    for A in codes:
        for B in codes:
            if not is_subcode(A, B):
                diff = words[A.defset] - words[B.defset]
                assert relative_min_weight(A, B).value == min(qwt(w) for w in diff)


@pytest.mark.parametrize("n", [7, 15, 17])
def test_relative_weight_inequalities(n):
    codes = [C for C in all_cyclic_codes(n, 2) if C.k]
    for A in codes:
        for B in codes:
            if is_subcode(A, B):
                continue
            rel = relative_min_weight(A, B)
            assert rel.value >= min_weight(A).value
            if is_subcode(B, A) and B.k:
                assert min_weight(A).value == min(rel.value, min_weight(B).value)


@pytest.mark.parametrize("block", [2, 8, 64, 2**15])
def test_result_independent_of_partitioning(block):
    C = code_from_defset(21, 2, [1, 2, 4, 8, 11, 16])
    B = dual(C)
    expect = oracle.min_weight(bits(C))
    assert min_weight(C, inner_block=block).value == expect
    assert relative_min_weight(C, B, inner_block=block).value == min_weight(C).value


def test_enumerate_span_covers_space_once():
    C = code_from_defset(8, 3, [1, 3])
    blocks = list(enumerate_span(C.spec, C.generator_matrix, inner_block=9))
    words = [tuple(int(x) for x in w) for b in blocks for w in b]
    assert len(words) == 3**C.k == len(set(words))
    assert set(words) == qwords(C)


@given(st.integers(2, 5), st.integers(0, 5))
def test_gray_code(q, k):
    v = [0] * k
    seen = {tuple(v)}
    for j, old, new in gray_steps(q, k):
        assert v[j] == old and old != new
        v[j] = new
        seen.add(tuple(v))
    assert len(seen) == q**k


def test_budget_exceeded_gives_interval():
    cache_clear()
    C = code_from_defset(23, 2, [0])  # [23,22] even-weight code, true d = 2
    w = min_weight(C, budget=1000)
    assert w.method == "bound_only"
    assert w.lower <= 2 <= w.upper
    assert w.exact == (w.lower == w.upper)
    G = code_from_defset(23, 2, [1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18])  # Golay, d = 7
    w = min_weight(G, budget=100)
    assert not w.exact and w.lower == 5 and 7 <= w.upper
    r = relative_min_weight(G, zero_code(23, 2), budget=100)
    assert r.lower <= 7 <= r.upper


def test_inexact_full_code_certified_by_bound():
    w = min_weight(full_code(23, 2), budget=10)
    assert w.method == "bound_only" and w.exact and w.value == 1


def test_weight_result_invariants():
    with pytest.raises(AssertionError):
        WeightResult(3, True, 2, 3, "exhaustive", 1)
    with pytest.raises(AssertionError):
        WeightResult(5, False, 6, 7, "bound_only", 1)
