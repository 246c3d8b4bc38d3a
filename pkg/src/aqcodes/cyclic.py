"""Cyclic codes described by defining sets.

A code of length n over GF(q) is identified by its defining set
T = {i : g(alpha^i) = 0}, with alpha the canonical primitive n-th root of
unity of the splitting field.  All lattice operations act on defining sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    DeltaOutOfRange,
    DuplicateResidues,
    FieldMismatch,
    KOutOfRange,
    LengthMismatch,
    NotCosetClosed,
    NotDivisor,
    NotMonic,
)
from .galois import FieldSpec, field_of_order, matmul
from .polyring import (
    Poly,
    require_coprime,
    coset_of,
    cyclotomic_cosets,
    minimal_polynomial,
    splitting_field,
)


@dataclass(frozen=True)
class CyclicCode:
    spec: FieldSpec
    n: int
    defset: tuple[int, ...]

    @cached_property
    def g(self) -> Poly:
        """Generator polynomial: product of the minimal polynomials of the cosets in T."""
        g = Poly.one(self.spec)
        done = set()
        for t in self.defset:
            if t not in done:
                c = coset_of(t, self.n, self.q)
                done.update(c.members)
                g = g * minimal_polynomial(c)
        return g

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def k(self) -> int:
        return self.n - len(self.defset)

    @property
    def T(self) -> frozenset[int]:
        return frozenset(self.defset)

    def is_zero(self) -> bool:
        return self.k == 0

    def is_full(self) -> bool:
        return self.k == self.n

    def __repr__(self) -> str:
        return f"[{self.n},{self.k}]_{self.q} T={list(self.defset)}"

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """k x n matrix whose rows are the cyclic shifts of g."""
        G = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            G[i, i : i + len(self.g.coeffs)] = self.g.coeffs
        return G

    @cached_property
    def parity_check_matrix(self) -> np.ndarray:
        return dual(self).generator_matrix


def _normalize_defset(n: int, q: int, T: Iterable[int]) -> tuple[int, ...]:
    require_coprime(n, q)
    T = list(T)
    if len(set(T)) != len(T):
        raise DuplicateResidues(f"repeated residues in {T}")
    for t in T:
        if not 0 <= t < n:
            raise ValueError(f"residue {t} outside [0, {n})")
    s = set(T)
    for t in T:
        if t * q % n not in s:
            raise NotCosetClosed(f"{t * q % n} = {q}*{t} mod {n} missing from {sorted(T)}")
    return tuple(sorted(T))


def _from_normalized(n: int, q: int, T: tuple[int, ...]) -> CyclicCode:
    return CyclicCode(field_of_order(q), n, T)


def code_from_defset(n: int, q: int, T: Iterable[int]) -> CyclicCode:
    return _from_normalized(n, q, _normalize_defset(n, q, T))


def code_from_genpoly(n: int, q: int, g: Poly) -> CyclicCode:
    require_coprime(n, q)
    if g.spec.q != q:
        raise FieldMismatch(f"generator over {g.spec!r}, expected q={q}")
    if g.is_zero() or not g.is_monic():
        raise NotMonic(f"{g} is not monic")
    if not g.divides(Poly.xn_minus_1(g.spec, n)):
        raise NotDivisor(f"{g} does not divide x^{n} - 1")
    sf = splitting_field(n, q)
    lifted = sf.lift(g)
    T = tuple(i for i in range(n) if lifted(sf.powers[i]) == 0)
    C = CyclicCode(g.spec, n, T)
    assert C.g == g, "roots of g do not reproduce g"
    return C


def full_code(n: int, q: int) -> CyclicCode:
    return code_from_defset(n, q, ())


def zero_code(n: int, q: int) -> CyclicCode:
    return code_from_defset(n, q, range(n))


def dual(C: CyclicCode) -> CyclicCode:
    """Defining set Z_n minus the negatives of T."""
    n = C.n
    neg = {(-t) % n for t in C.defset}
    return _from_normalized(n, C.q, tuple(i for i in range(n) if i not in neg))


def same_ambient(A: CyclicCode, B: CyclicCode):
    if A.n != B.n:
        raise LengthMismatch(f"lengths {A.n} and {B.n}")
    if A.spec != B.spec:
        raise FieldMismatch(f"{A.spec!r} vs {B.spec!r}")


def intersect(A: CyclicCode, B: CyclicCode) -> CyclicCode:
    same_ambient(A, B)
    return _from_normalized(A.n, A.q, tuple(sorted(A.T | B.T)))


def code_sum(A: CyclicCode, B: CyclicCode) -> CyclicCode:
    same_ambient(A, B)
    return _from_normalized(A.n, A.q, tuple(sorted(A.T & B.T)))


def is_subcode(A: CyclicCode, B: CyclicCode) -> bool:
    """True when A is contained in B."""
    same_ambient(A, B)
    return B.T <= A.T


def hull(C: CyclicCode) -> CyclicCode:
    return intersect(C, dual(C))


def lattice_ops(A: CyclicCode, B: CyclicCode, kind: str):
    if kind == "intersect":
        return intersect(A, B)
    if kind == "sum":
        return code_sum(A, B)
    if kind == "is_subcode":
        return is_subcode(A, B)
    raise ValueError(f"unknown lattice operation {kind!r}")


def matrices(C: CyclicCode, kind: str) -> np.ndarray:
    if kind == "generator":
        return C.generator_matrix
    if kind == "parity_check":
        return C.parity_check_matrix
    raise ValueError(f"unknown matrix kind {kind!r}")


def check_orthogonal(A: CyclicCode, B: CyclicCode) -> bool:
    """G_A G_B^T = 0 over GF(q)."""
    same_ambient(A, B)
    if A.k == 0 or B.k == 0:
        return True
    return not matmul(A.spec, A.generator_matrix, B.generator_matrix.T).any()


def bch_construct(n: int, q: int, delta: int, b: int = 1) -> CyclicCode:
    require_coprime(n, q)
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"designed distance {delta} not in [2, {n}]")
    T = set()
    for i in range(b, b + delta - 1):
        T.update(coset_of(i % n, n, q).members)
    return _from_normalized(n, q, tuple(sorted(T)))


def rs_construct(q: int, k: int, b: int = 1) -> CyclicCode:
    n = q - 1
    if not 0 <= k <= n:
        raise KOutOfRange(f"dimension {k} not in [0, {n}]")
    T = {(b + i) % n for i in range(n - k)}
    return _from_normalized(n, q, tuple(sorted(T)))


def all_cyclic_codes(n: int, q: int) -> Iterator[CyclicCode]:
    """Every cyclic code of length n over GF(q), by subsets of cosets."""
    cosets = cyclotomic_cosets(n, q)
    for mask in range(1 << len(cosets)):
        T = itertools.chain.from_iterable(
            c.members for i, c in enumerate(cosets) if mask >> i & 1
        )
        yield _from_normalized(n, q, tuple(sorted(T)))
