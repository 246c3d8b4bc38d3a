"""Asymmetric quantum codes and asymmetric subsystem codes from cyclic codes.

Every construction funnels into the CSS pair (C1, C2) with C2^perp inside C1:
k = k1 + k2 - n, and the two distances are the relative weights
wt(C1 \\ C2^perp) and wt(C2 \\ C1^perp), dz the larger and dx the smaller.

Role convention for the cyclic constructions: the code generated by f*g1 is
used as C2 (a subcode of C1), and the code with defining set
T(C1^perp) minus (T u -T) is used as C2^perp.  These are the assignments under
which the dimension formula 2k - b - n comes out; each construction asserts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .cyclic import (
    CyclicCode,
    _normalize_defset,
    code_from_defset,
    code_from_genpoly,
    dual,
    hull,
    is_subcode,
    same_ambient,
)
from .errors import (
    GaugeOutOfRange,
    HullTooLarge,
    InexactDistance,
    NonpositiveDimension,
    NotNested,
    RangeViolation,
    TNotInAdmissibleSet,
)
from .galois import matmul
from .polyring import Poly
from .weights import DEFAULT_BUDGET, WeightResult, min_weight, relative_min_weight

SCHEMA_FIELDS = (
    "type", "n", "q", "k", "r", "dx", "dz", "dx_exact", "dz_exact", "construction",
    "c1_defset", "c2_defset", "pure_x", "pure_z", "tx", "tz",
)  # fmt: skip


class _Record:
    type: ClassVar[str]

    @property
    def exact(self) -> bool:
        return self.dx.exact and self.dz.exact

    def capability(self) -> tuple[int, int] | None:
        return correction_capability(self) if self.exact else None

    def as_dict(self) -> dict:
        cap = self.capability()
        return {
            "type": self.type,
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "r": self.r,
            "dx": self.dx.value,
            "dz": self.dz.value,
            "dx_exact": self.dx.exact,
            "dz_exact": self.dz.exact,
            "construction": self.construction,
            "c1_defset": list(self.c1_defset),
            "c2_defset": list(self.c2_defset),
            "pure_x": self.pure_x,
            "pure_z": self.pure_z,
            "tx": cap[0] if cap else None,
            "tz": cap[1] if cap else None,
        }

    def label(self) -> str:
        mid = f"{self.k}" if self.r is None else f"{self.k},{self.r}"
        return f"[[{self.n},{mid},{self.dz}/{self.dx}]]_{self.q}"


@dataclass(frozen=True)
class AqecRecord(_Record):
    n: int
    q: int
    k: int
    dx: WeightResult
    dz: WeightResult
    construction: str
    c1_defset: tuple[int, ...]
    c2_defset: tuple[int, ...]
    pure_x: bool | None = None
    pure_z: bool | None = None

    type: ClassVar[str] = "aqec"
    r: ClassVar[None] = None


@dataclass(frozen=True)
class SubsystemRecord(_Record):
    n: int
    q: int
    k: int
    r: int
    dx: WeightResult
    dz: WeightResult
    construction: str
    c1_defset: tuple[int, ...]
    c2_defset: tuple[int, ...]
    pure_x: bool | None = None
    pure_z: bool | None = None

    type: ClassVar[str] = "subsystem"


@dataclass(frozen=True)
class StabilizerPair:
    hx: np.ndarray
    hz: np.ndarray


def correction_capability(rec) -> tuple[int, int]:
    """(bit-flip, phase-flip) errors corrected: floor((d-1)/2) each."""
    if not (rec.dx.exact and rec.dz.exact):
        raise InexactDistance(f"{rec.label()} has inexact distances")
    return (rec.dx.value - 1) // 2, (rec.dz.value - 1) // 2


def _order(pairs, budget):
    """Relative weights of (ambient, excluded) pairs, sorted into (dx side, dz side).

    Ties keep the first pair on the dx side.
    """
    (a1, b1), (a2, b2) = pairs
    w1 = relative_min_weight(a1, b1, budget)
    w2 = relative_min_weight(a2, b2, budget)
    if w2.value < w1.value:
        return (w2, a2), (w1, a1)
    return (w1, a1), (w2, a2)


def _purity(sides, budget) -> tuple[bool, bool]:
    flags = []
    for w, ambient in sides:
        m = min_weight(ambient, budget)
        if not (w.exact and m.exact):
            raise InexactDistance("purity needs exact weights")
        flags.append(w.value == m.value)
    return flags[0], flags[1]


def _purity_or_none(sides, budget):
    try:
        return _purity(sides, budget)
    except InexactDistance:
        return None, None


def _check_css(C1: CyclicCode, C2: CyclicCode) -> int:
    same_ambient(C1, C2)
    C2d = dual(C2)
    if not is_subcode(C2d, C1):
        raise NotNested(f"dual of {C2} is not contained in {C1}")
    k = C1.k + C2.k - C1.n
    assert k == C1.k - C2d.k
    if k < 1:
        raise NonpositiveDimension(f"k1 + k2 - n = {k}")
    return k


def css_aqec(
    C1: CyclicCode, C2: CyclicCode, budget: int = DEFAULT_BUDGET, construction: str = "css"
) -> AqecRecord:
    k = _check_css(C1, C2)
    sides = _order([(C1, dual(C2)), (C2, dual(C1))], budget)
    pure_x, pure_z = _purity_or_none(sides, budget)
    return AqecRecord(
        C1.n, C1.q, k, sides[0][0], sides[1][0], construction,
        C1.defset, C2.defset, pure_x, pure_z,
    )  # fmt: skip


def purity_check(
    C1: CyclicCode, C2: CyclicCode, rec: AqecRecord | None = None, budget: int = DEFAULT_BUDGET
) -> tuple[bool, bool]:
    """Whether each side's relative weight equals the plain minimum weight of its code."""
    _check_css(C1, C2)
    return _purity(_order([(C1, dual(C2)), (C2, dual(C1))], budget), budget)


def css_subsystem(
    C1: CyclicCode, C2: CyclicCode, r: int, budget: int = DEFAULT_BUDGET
) -> SubsystemRecord:
    base = css_aqec(C1, C2, budget)
    if not 0 <= r <= base.k:
        raise GaugeOutOfRange(f"r = {r} not in [0, {base.k}]")
    return SubsystemRecord(
        base.n, base.q, base.k - r, r, base.dx, base.dz, "css",
        base.c1_defset, base.c2_defset, base.pure_x, base.pure_z,
    )  # fmt: skip


def genpoly_aqec(C1: CyclicCode, f: Poly, budget: int = DEFAULT_BUDGET) -> AqecRecord:
    b = f.degree
    if b < 1:
        raise RangeViolation("f must be nonconstant")
    D = code_from_genpoly(C1.n, C1.q, f * C1.g)
    rec = css_aqec(C1, D, budget, construction="genpoly")
    assert rec.k == 2 * C1.k - b - C1.n
    return rec


def defset_aqec(C1: CyclicCode, T, budget: int = DEFAULT_BUDGET) -> AqecRecord:
    n = C1.n
    T = set(_normalize_defset(n, C1.q, T))
    U = T | {(-t) % n for t in T}
    T_dual = dual(C1).T
    admissible = T_dual - C1.T
    if not U <= admissible:
        raise TNotInAdmissibleSet(
            f"T u T^-1 = {sorted(U)} not inside {sorted(admissible)}"
        )
    b = len(U)
    if not 0 <= b < 2 * C1.k - n:
        raise RangeViolation(f"b = {b} outside [0, {2 * C1.k - n})")
    D = code_from_defset(n, C1.q, sorted(T_dual - U))
    rec = css_aqec(C1, dual(D), budget, construction="defset")
    assert rec.k == 2 * C1.k - b - n
    return rec


def euclidean_assc(
    C1: CyclicCode, budget: int = DEFAULT_BUDGET
) -> tuple[SubsystemRecord, SubsystemRecord]:
    """Subsystem codes from C1 and its hull C2 = C1 n C1^perp (needs k1 + k2 < n)."""
    n = C1.n
    C2 = hull(C1)
    k1, k2 = C1.k, C2.k
    if k1 + k2 >= n:
        raise HullTooLarge(f"k1 + k2 = {k1 + k2} >= n = {n}")
    sides = _order([(dual(C2), C1), (dual(C1), C2)], budget)
    pure_x, pure_z = _purity_or_none(sides, budget)
    dx, dz = sides[0][0], sides[1][0]
    common = dict(n=n, q=C1.q, dx=dx, dz=dz, construction="euclidean",
                  c1_defset=C1.defset, c2_defset=C2.defset, pure_x=pure_x, pure_z=pure_z)  # fmt: skip
    return (
        SubsystemRecord(k=n - (k1 + k2), r=k1 - k2, **common),
        SubsystemRecord(k=k1 - k2, r=n - (k1 + k2), **common),
    )


def stabilizer_matrices(C1: CyclicCode, C2: CyclicCode) -> StabilizerPair:
    """HX spans C2^perp, HZ spans C1^perp; they must commute."""
    same_ambient(C1, C2)
    if not is_subcode(dual(C2), C1):
        raise NotNested(f"dual of {C2} is not contained in {C1}")
    hx = dual(C2).generator_matrix
    hz = dual(C1).generator_matrix
    if hx.size and hz.size and matmul(C1.spec, hx, hz.T).any():
        raise NotNested("HX HZ^T != 0")
    return StabilizerPair(hx, hz)


def record_codes(rec) -> tuple[CyclicCode, CyclicCode]:
    """(C1, C2) rebuilt from a record's defining sets."""
    C1 = code_from_defset(rec.n, rec.q, rec.c1_defset)
    C2 = code_from_defset(rec.n, rec.q, rec.c2_defset)
    return C1, C2


def record_stabilizers(rec) -> StabilizerPair:
    C1, C2 = record_codes(rec)
    if rec.construction == "euclidean":
        # the hull is the stabilizer on both sides
        H = dual(C2)
        return stabilizer_matrices(H, H)
    return stabilizer_matrices(C1, C2)
