"""Arithmetic in GF(p) and GF(p^m).

Elements are stored as integers ``v = c_0 + c_1 p + ... + c_{m-1} p^(m-1)``
where ``c_i`` are the polynomial-basis coefficients.  Integer order is the
canonical order used to pick moduli and primitive elements.

Small fields (q <= 2**16) get exp/log tables; larger fields (only reached
internally, as splitting fields of x^n - 1) fall back to schoolbook
polynomial multiplication.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy

from .errors import (
    BadDegree,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    OrderUnavailable,
    TooLarge,
)

FIELD_LIMIT = 2**20
# Splitting fields of x^n - 1 for n <= 40 reach p^84; elements stay small
# integers, so only the table-free code path is used there.
SPLITTING_LIMIT = 2**256
TABLE_LIMIT = 2**16
NUMPY_TABLE_LIMIT = 1024


def is_prime(p: int) -> bool:
    return p >= 2 and bool(sympy.isprime(p))


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    return int(p), int(m)


# -- polynomials over the prime field, used only to find moduli ------------


def _to_digits(v: int, p: int) -> list[int]:
    out = []
    while v:
        v, r = divmod(v, p)
        out.append(r)
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim(a[:df] if len(a) > df else a)


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
    return _pmod([int(c) % p for c in prod], f, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _frobenius_power(f: list[int], p: int, k: int) -> list[int]:
    """x^(p^k) mod f."""
    r = _pmod([0, 1], f, p)
    for _ in range(k):
        acc, base, e = [1], r, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        r = acc
    return r


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m <= 0:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    if _psub(_frobenius_power(f, p, m), x, p):
        return False
    for r in sympy.primefactors(m):
        h = _psub(_frobenius_power(f, p, m // r), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _has_root(f: list[int], p: int) -> bool:
    for a in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % p
        if acc == 0:
            return True
    return False


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    base = p**m
    for r in range(1, base):
        if r % p == 0:
            continue
        f = _to_digits(r, p)
        f = f + [0] * (m - len(f)) + [1]
        if _has_root(f, p):
            continue
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- the field --------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # representation helpers

    def coeffs(self, v: int) -> list[int]:
        d = _to_digits(v, self.p)
        return d + [0] * (self.m - len(d))

    def from_coeffs(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    def __call__(self, v: int) -> FieldElement:
        return FieldElement(self, v % self.q if self.m == 1 else v)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    # integer-level arithmetic

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._tables is not None:
            exp, log = self._tables
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._slow_mul(a, b)

    def _slow_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            return self._mul2(a, b)
        p, m = self.p, self.m
        prod = np.convolve(
            np.array(self.coeffs(a), dtype=np.int64), np.array(self.coeffs(b), dtype=np.int64)
        ) % p
        low = (prod[:m] + prod[m:] @ self._reduction) % p
        return self.from_coeffs(low.tolist())

    @cached_property
    def _reduction(self) -> np.ndarray:
        """Row j holds x^(m+j) mod the modulus, for j < m - 1."""
        p, m = self.p, self.m
        rows = []
        r = [(-c) % p for c in self.modulus[:m]]  # x^m
        for _ in range(m - 1):
            rows.append(r)
            top = r[-1]
            r = [0] + r[:-1]
            r = [(x + top * y) % p for x, y in zip(r, rows[0])]
        return np.array(rows, dtype=np.int64).reshape(m - 1, m)

    @cached_property
    def _modulus_bits(self) -> int:
        return sum(c << i for i, c in enumerate(self.modulus))

    def _mul2(self, a: int, b: int) -> int:
        prod = 0
        while b:
            if b & 1:
                prod ^= a
            a <<= 1
            b >>= 1
        mod, m = self._modulus_bits, self.m
        for i in range(prod.bit_length() - 1, m - 1, -1):
            if prod >> i & 1:
                prod ^= mod << (i - m)
        return prod

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self._tables is not None:
            exp, log = self._tables
            return exp[(log[a] * e) % (self.q - 1)]
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # multiplicative structure

    @cached_property
    def _order_factors(self) -> list[int]:
        return [int(r) for r in sympy.primefactors(self.q - 1)]

    def _slow_pow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p)
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        order = self.q - 1
        for r in self._order_factors:
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    @cached_property
    def primitive(self) -> int:
        """Smallest element (integer order) of multiplicative order q-1."""
        n = self.q - 1
        for v in range(1, self.q):
            if all(self._slow_pow(v, n // r) != 1 for r in self._order_factors):
                return v
        raise AssertionError("no primitive element")  # unreachable

    @cached_property
    def _tables(self):
        if self.m == 1 or self.q > TABLE_LIMIT:
            return None
        n = self.q - 1
        beta = self.primitive
        exp = [0] * n
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, beta)
        return exp, log

    # vectorized tables for the enumeration engine

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(add, mul, neg) lookup tables as numpy arrays."""
        q = self.q
        if q > NUMPY_TABLE_LIMIT:
            raise TooLarge(f"{self!r} too large for dense lookup tables")
        dtype = np.uint8 if q <= 256 else np.uint16
        if self.p == 2:
            r = np.arange(q)
            add = (r[:, None] ^ r[None, :]).astype(dtype)
        elif self.m == 1:
            r = np.arange(q)
            add = ((r[:, None] + r[None, :]) % q).astype(dtype)
        else:
            add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=dtype)
        mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=dtype)
        neg = np.array([self.neg(a) for a in range(q)], dtype=dtype)
        return add, mul, neg


@functools.lru_cache(maxsize=None)
def _build_field(p: int, m: int) -> FieldSpec:
    return FieldSpec(p, m, _smallest_irreducible(p, m))


def make_field(p: int, m: int = 1, *, limit: int = FIELD_LIMIT) -> FieldSpec:
    """GF(p^m) with the smallest monic irreducible modulus (integer order)."""
    if m < 1:
        raise BadDegree(f"extension degree must be >= 1, got {m}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p**m > limit:
        raise TooLarge(f"field size {p}^{m} exceeds {limit}")
    return _build_field(p, m)


def field_of_order(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"{self.value} is not an element of {self.spec!r}")

    @property
    def coeffs(self) -> list[int]:
        return self.spec.coeffs(self.value)

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.spec != self.spec:
                raise FieldMismatch(f"{self.spec!r} vs {b.spec!r}")
            return b.value
        if isinstance(b, int):
            return self.spec(b).value if self.spec.m == 1 else b
        return NotImplemented

    def __add__(self, b):
        return FieldElement(self.spec, self.spec.add(self.value, self._other(b)))

    def __sub__(self, b):
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(b)))

    def __mul__(self, b):
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(b)))

    def __truediv__(self, b):
        return FieldElement(self.spec, self.spec.div(self.value, self._other(b)))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def order(self) -> int:
        return self.spec.multiplicative_order(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        if self.spec.m == 1:
            return f"{self.value}"
        terms = [
            ("1" if i == 0 else "a" if i == 1 else f"a^{i}") if c == 1 else f"{c}*a^{i}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return "+".join(terms) or "0"


def field_arith(a: FieldElement, b, kind: str) -> FieldElement:
    """Dispatch on kind in {add, sub, mul, div, pow}; for pow, b is an int."""
    if kind == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElement) or a.spec != b.spec:
        raise FieldMismatch("operands belong to different fields")
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    try:
        return ops[kind](b)
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None


def primitive_element(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, spec.primitive)


def nth_root_of_unity(spec: FieldSpec, n: int) -> FieldElement:
    """beta^((q-1)/n) for the canonical primitive element beta."""
    if n < 1 or (spec.q - 1) % n:
        raise OrderUnavailable(f"{n} does not divide {spec.q - 1}")
    return FieldElement(spec, spec.pow(spec.primitive, (spec.q - 1) // n))


def matmul(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field; inputs hold integer element codes."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    if spec.m == 1:
        p = spec.p
        if p < 2**20:
            # blocks keep partial sums below 2^62
            step = max(1, (2**62) // (p * p))
            out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
            for s in range(0, a.shape[1], step):
                out = (out + a[:, s : s + step] @ b[s : s + step]) % p
            return out
    add, mul, _ = spec.arrays
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = add[out, mul[a[:, t][:, None], b[t][None, :]]].astype(np.int64)
    return out
