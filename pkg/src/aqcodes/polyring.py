"""Polynomials over GF(q), cyclotomic cosets and the factorization of x^n - 1."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import CodeError, DivisionByZero, FieldMismatch, NotCoprime
from .galois import (
    SPLITTING_LIMIT,
    FieldElement,
    FieldSpec,
    field_of_order,
    make_field,
    nth_root_of_unity,
)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients low degree first as integer element codes."""

    spec: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (0, 1))

    @classmethod
    def one(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (1,))

    @classmethod
    def xn_minus_1(cls, spec: FieldSpec, n: int) -> Poly:
        return cls(spec, (spec.neg(1),) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.spec, c) for c in self.coeffs]

    def _check(self, other: Poly):
        if self.spec != other.spec:
            raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(self.spec, tuple(self.spec.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.spec)
        f = self.spec
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, tuple(out))

    def scale(self, c: int) -> Poly:
        return Poly(self.spec, tuple(self.spec.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.spec
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = f.inv(other.lead)
        quot = [0] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = f.mul(rem[i], inv_lead)
            if c == 0:
                continue
            quot[i - db] = c
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b))
        return Poly(f, tuple(quot)), Poly(f, tuple(rem[:db]))

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.lead))

    def __call__(self, x: int) -> int:
        """Evaluate at an element code of the same field (Horner)."""
        f = self.spec
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(reversed(terms))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_arith(a: Poly, b, kind: str):
    """Dispatch on kind in {add, mul, divmod, gcd, eval}."""
    if kind == "eval":
        if isinstance(b, FieldElement):
            if b.spec != a.spec:
                raise FieldMismatch(f"{a.spec!r} vs {b.spec!r}")
            return FieldElement(a.spec, a(b.value))
        return FieldElement(a.spec, a(int(b)))
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    if kind == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown operation {kind!r}")


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Parse "1,1,0,1" (low degree first) into a polynomial."""
    text = text.strip()
    if not text:
        return Poly(spec)
    coeffs = []
    for tok in text.split(","):
        c = int(tok)
        if not 0 <= c < spec.q:
            raise ValueError(f"coefficient {c} is not an element of {spec!r}")
        coeffs.append(c)
    return Poly(spec, tuple(coeffs))


# -- cyclotomic cosets ---------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    q: int
    rep: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def require_coprime(n: int, q: int):
    if n < 1:
        raise CodeError(f"length must be >= 1, got {n}")
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) = {math.gcd(n, q)}")


@functools.lru_cache(maxsize=None)
def _cosets(n: int, q: int) -> tuple[CyclotomicCoset, ...]:
    seen = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        orbit = []
        x = s
        while x not in orbit:
            orbit.append(x)
            x = x * q % n
        seen.update(orbit)
        out.append(CyclotomicCoset(n, q, s, tuple(sorted(orbit))))
    return tuple(out)


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    """q-ary cyclotomic cosets mod n, sorted by smallest member."""
    require_coprime(n, q)
    return list(_cosets(n, q))


def coset_of(s: int, n: int, q: int) -> CyclotomicCoset:
    require_coprime(n, q)
    s %= n
    return next(c for c in _cosets(n, q) if s in c.members)


def multiplicative_order(q: int, n: int) -> int:
    """Order of q modulo n (1 for n = 1)."""
    require_coprime(n, q)
    if n == 1:
        return 1
    e, x = 1, q % n
    while x != 1:
        x = x * q % n
        e += 1
    return e


# -- splitting field -----------------------------------------------------------


@dataclass(frozen=True)
class SplittingField:
    """GF(q^e) containing the n-th roots of unity, with a fixed copy of GF(q)."""

    n: int
    base: FieldSpec
    big: FieldSpec
    alpha: int
    embed: tuple[int, ...]  # base element code -> big element code
    powers: tuple[int, ...]  # alpha^0 .. alpha^(n-1)

    @functools.cached_property
    def restrict(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.embed)}

    def lift(self, g: Poly) -> Poly:
        return Poly(self.big, tuple(self.embed[c] for c in g.coeffs))


def _embedding(base: FieldSpec, big: FieldSpec) -> tuple[int, ...]:
    if base.m == 1:
        return tuple(range(base.q))
    if big == base:
        return tuple(range(base.q))
    # base = GF(p)[x]/(h): send x to the smallest root of h inside big
    gamma = big.pow(big.primitive, (big.q - 1) // (base.q - 1))
    h = Poly(big, base.modulus)
    roots = []
    y = 1
    for _ in range(base.q - 1):
        if h(y) == 0:
            roots.append(y)
        y = big.mul(y, gamma)
    rho = min(roots)
    images = []
    for v in range(base.q):
        acc, power = 0, 1
        for c in base.coeffs(v):
            acc = big.add(acc, big.mul(c, power))
            power = big.mul(power, rho)
        images.append(acc)
    return tuple(images)


@functools.lru_cache(maxsize=None)
def splitting_field(n: int, q: int) -> SplittingField:
    base = field_of_order(q)
    e = multiplicative_order(q, n)
    big = make_field(base.p, base.m * e, limit=SPLITTING_LIMIT)
    alpha = nth_root_of_unity(big, n).value
    powers = [1]
    for _ in range(n - 1):
        powers.append(big.mul(powers[-1], alpha))
    return SplittingField(n, base, big, alpha, _embedding(base, big), tuple(powers))


def minimal_polynomial(coset: CyclotomicCoset, base: FieldSpec | None = None) -> Poly:
    """prod_{i in coset} (x - alpha^i), brought back to the base field."""
    if base is not None and base.q != coset.q:
        raise FieldMismatch(f"coset is {coset.q}-ary but field is {base!r}")
    return _minimal_polynomials(coset.n, coset.q)[coset.rep]


@functools.lru_cache(maxsize=None)
def _minimal_polynomials(n: int, q: int) -> dict[int, Poly]:
    sf = splitting_field(n, q)
    big = sf.big
    out = {}
    for coset in _cosets(n, q):
        prod = Poly.one(big)
        for i in coset.members:
            prod = prod * Poly(big, (big.neg(sf.powers[i]), 1))
        try:
            coeffs = tuple(sf.restrict[c] for c in prod.coeffs)
        except KeyError:
            raise AssertionError(f"minimal polynomial of {coset} left the base field") from None
        out[coset.rep] = Poly(sf.base, coeffs)
    return out


def factor_xn_minus_1(n: int, q: int) -> list[tuple[CyclotomicCoset, Poly]]:
    require_coprime(n, q)
    mp = _minimal_polynomials(n, q)
    return [(c, mp[c.rep]) for c in _cosets(n, q)]
