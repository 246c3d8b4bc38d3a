"""Brute-force binary code oracle.

Codewords are n-bit integers.  Nothing here touches the package: codes are
spanned from explicit generator polynomials and duals are found by scanning
all 2**n vectors.
"""

from itertools import product


def popcount(x):
    return bin(x).count("1")


def polymul2(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def cyclic_span(g, n):
    """All codewords of the binary cyclic code generated by bitmask polynomial g."""
    deg = g.bit_length() - 1
    rows = [g << i for i in range(n - deg)]
    return span(rows)


def span(rows):
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words


def dual(words, n):
    return {v for v in range(1 << n) if all(popcount(v & w) % 2 == 0 for w in words)}


def dual_from_rows(rows, n):
    return {v for v in range(1 << n) if all(popcount(v & r) % 2 == 0 for r in rows)}


def min_weight(words):
    return min(popcount(w) for w in words if w)


def relative_weight(a, b):
    return min(popcount(w) for w in a - b)


def qary_span(rows, q):
    """All F_q combinations of rows for prime q (rows are tuples)."""
    n = len(rows[0])
    out = set()
    for coeffs in product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % q for i in range(n)))
    return out
