"""Minimum and relative minimum weights by codeword enumeration.

Codewords are generated from the generator rows.  For wt(A \\ B) each row of
A is extended by its syndrome under B's parity-check matrix; the syndrome of a
combination is the same combination of row syndromes, so membership in B is
read off the extended word without a second matrix product.

The message space is split into an inner block (all combinations of the last
few rows, materialised once) and an outer part walked in q-ary Gray-code
order, so each outer step costs one scaled-row addition.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .cyclic import CyclicCode, same_ambient, is_subcode
from .errors import EmptyDifference, ZeroCode
from .galois import FieldSpec, matmul

DEFAULT_BUDGET = 2**22
INNER_BLOCK = 2**15


@dataclass(frozen=True)
class WeightResult:
    value: int
    exact: bool
    lower: int
    upper: int
    method: str  # "exhaustive" or "bound_only"
    enumerated: int

    def __post_init__(self):
        assert self.lower <= self.value <= self.upper
        assert not self.exact or self.lower == self.upper == self.value

    def __str__(self) -> str:
        return str(self.value) if self.exact else f"{self.value}?[{self.lower},{self.upper}]"


def bch_bound(C: CyclicCode) -> int:
    """1 + longest run of cyclically consecutive residues in the defining set."""
    n, T = C.n, C.T
    if not T:
        return 1
    if len(T) == n:
        return n + 1
    best = 0
    for start in T:
        if (start - 1) % n in T:
            continue
        run = 0
        while (start + run) % n in T:
            run += 1
        best = max(best, run)
    return best + 1


def gray_steps(q: int, k: int):
    """Yield (digit, old, new) for each step of the modular q-ary Gray code.

    Starting from all zeros, visits every vector of Z_q^k exactly once and
    changes one digit per step.
    """
    digits = [0] * k
    prev = [0] * k
    for i in range(1, q**k):
        x = i
        for j in range(k):
            x, digits[j] = divmod(x, q)
        gray = [(digits[j] - (digits[j + 1] if j + 1 < k else 0)) % q for j in range(k)]
        for j in range(k):
            if gray[j] != prev[j]:
                yield j, prev[j], gray[j]
                prev[j] = gray[j]
                break


def _combinations(spec: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All q^t combinations of the given t rows, as a (q^t, L) array."""
    add, mul, _ = spec.arrays
    block = np.zeros((1, rows.shape[1]), dtype=add.dtype)
    for r in rows:
        parts = [block]
        for c in range(1, spec.q):
            parts.append(add[block, mul[c][r][None, :]])
        block = np.concatenate(parts)
    return block


def enumerate_span(spec: FieldSpec, rows: np.ndarray, inner_block: int = INNER_BLOCK):
    """Yield blocks covering every F_q-combination of rows exactly once."""
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[0]
    q = spec.q
    add, mul, neg = spec.arrays
    t = 0
    while t < k and q ** (t + 1) <= max(inner_block, q):
        t += 1
    inner = _combinations(spec, rows[k - t :])
    outer = rows[: k - t]
    offset = np.zeros(rows.shape[1], dtype=add.dtype)
    yield inner
    for j, old, new in gray_steps(q, k - t):
        delta = add[new, neg[old]]
        offset = add[offset, mul[delta][outer[j]]]
        yield add[inner, offset[None, :]]


def _low_weight_messages(q: int, k: int, limit: int):
    """Message vectors ordered by Hamming weight, at most `limit` of them."""
    count = 0
    for w in range(1, k + 1):
        for support in itertools.combinations(range(k), w):
            for vals in itertools.product(range(1, q), repeat=w):
                if count >= limit:
                    return
                m = [0] * k
                for s, v in zip(support, vals):
                    m[s] = v
                count += 1
                yield m


def _search(spec, rows, n, budget, lower, inner_block):
    """Minimum codeword weight over words whose tail (syndrome) is nonzero.

    With no tail columns every nonzero word qualifies.
    """
    k = rows.shape[0]
    has_tail = rows.shape[1] > n
    total = spec.q**k
    best = None
    if total <= budget:
        visited = 0
        for block in enumerate_span(spec, rows, inner_block):
            visited += len(block)
            wts = np.count_nonzero(block[:, :n], axis=1)
            ok = block[:, n:].any(axis=1) if has_tail else wts > 0
            if ok.any():
                m = int(wts[ok].min())
                best = m if best is None else min(best, m)
                if best == 1:
                    break
        if best is None:
            raise EmptyDifference("no qualifying codeword")
        return WeightResult(best, True, best, best, "exhaustive", visited)

    visited = 0
    gen = _low_weight_messages(spec.q, k, budget)
    while True:
        chunk = list(itertools.islice(gen, 1 << 14))
        if not chunk:
            break
        visited += len(chunk)
        words = matmul(spec, np.array(chunk, dtype=np.int64), rows)
        wts = np.count_nonzero(words[:, :n], axis=1)
        ok = words[:, n:].any(axis=1) if has_tail else wts > 0
        if ok.any():
            m = int(wts[ok].min())
            best = m if best is None else min(best, m)
        if best is not None and best <= lower:
            break
    upper = n if best is None else best
    lower = min(lower, upper)
    return WeightResult(upper, lower == upper, lower, upper, "bound_only", visited)


@functools.lru_cache(maxsize=4096)
def _min_weight(C: CyclicCode, budget: int, inner_block: int) -> WeightResult:
    return _search(C.spec, C.generator_matrix, C.n, budget, bch_bound(C), inner_block)


def min_weight(
    C: CyclicCode, budget: int = DEFAULT_BUDGET, *, inner_block: int = INNER_BLOCK
) -> WeightResult:
    if C.k == 0:
        raise ZeroCode(f"{C} has no nonzero codewords")
    return _min_weight(C, budget, inner_block)


@functools.lru_cache(maxsize=4096)
def _relative(A: CyclicCode, B: CyclicCode, budget: int, inner_block: int) -> WeightResult:
    G = A.generator_matrix
    H = B.parity_check_matrix
    S = matmul(A.spec, G, H.T)
    rows = np.hstack([G, S])
    return _search(A.spec, rows, A.n, budget, bch_bound(A), inner_block)


def relative_min_weight(
    A: CyclicCode, B: CyclicCode, budget: int = DEFAULT_BUDGET, *, inner_block: int = INNER_BLOCK
) -> WeightResult:
    """Minimum weight of codewords of A that are not in B."""
    same_ambient(A, B)
    if is_subcode(A, B):
        raise EmptyDifference(f"{A} is contained in {B}")
    return _relative(A, B, budget, inner_block)


def cache_clear():
    """Forget memoised weights so the next call re-enumerates."""
    _min_weight.cache_clear()
    _relative.cache_clear()
