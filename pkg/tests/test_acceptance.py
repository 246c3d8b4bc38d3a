"""End-to-end acceptance checks, one test per criterion.

Each test appends a "criterion N PASS|FAIL" line that is printed in the
terminal summary, whether or not the assertions hold.
"""

import contextlib
import json
import math
import random
import subprocess
import sys
import time
from itertools import product

import numpy as np

import oracle
from aqcodes import weights
from aqcodes.aqec import (
    defset_aqec,
    euclidean_assc,
    genpoly_aqec,
    record_stabilizers,
)
from aqcodes.catalog import search_catalog
from aqcodes.cli import capture
from aqcodes.cyclic import (
    all_cyclic_codes,
    bch_construct,
    check_orthogonal,
    code_from_defset,
    dual,
    hull,
    rs_construct,
)
from aqcodes.polyring import Poly, cyclotomic_cosets, factor_xn_minus_1
from aqcodes.weights import bch_bound, min_weight
from conftest import ACCEPTANCE

HAMMING15 = [1, 2, 4, 8]


@contextlib.contextmanager
def criterion(num, what, limit=None):
    weights.cache_clear()
    t0 = time.perf_counter()
    ok, note = False, ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    except BaseException as e:
        note = f" ({type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''})"
        raise
    finally:
        elapsed = time.perf_counter() - t0
        bound = f" < {limit:g}s" if limit is not None else ""
        ACCEPTANCE.append(
            f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {what}  [{elapsed:.2f}s{bound}]{note}"
        )


def bits(C):
    if C.k == 0:
        return {0}
    return oracle.cyclic_span(sum(c << i for i, c in enumerate(C.g.coeffs)), C.n)


def test_criterion_1_steane():
    with criterion(1, "Steane [[7,1,3/3]]_2, pure on both sides", 1):
        status, out, err = capture(
            ["aqec", "css", "--n", "7", "--q", "2", "--defset1", "1,2,4", "--defset2", "1,2,4", "--format", "json"]
        )
        assert status == 0, err
        d = json.loads(out)
        assert (d["n"], d["k"], d["dx"], d["dz"], d["q"]) == (7, 1, 3, 3, 2)
        assert d["pure_x"] is True and d["pure_z"] is True
        assert d["dx_exact"] and d["dz_exact"]
        # oracle: the 16 Hamming codewords minus the 8 simplex ones
        ham = oracle.cyclic_span(0b1011, 7)
        simplex = oracle.dual(ham, 7)
        assert len(ham) == 16 and len(simplex) == 8
        assert oracle.relative_weight(ham, simplex) == 3 == oracle.min_weight(ham)


def test_criterion_2_defset():
    with criterion(2, "defining-set AQEC, C1=[15,11], T={5,10}: [[15,5,3/3]]_2", 10):
        C1 = code_from_defset(15, 2, HAMMING15)
        rec = defset_aqec(C1, [5, 10])
        b = 2
        C2 = code_from_defset(15, 2, rec.c2_defset)
        assert rec.k == 5 == 2 * C1.k - b - 15 == C1.k + C2.k - 15
        assert rec.dx.exact and rec.dz.exact and rec.dz.value >= rec.dx.value
        # oracle: 2^11 and 2^9 codeword enumerations, frozen at (3, 3)
        w1, w2 = bits(C1), bits(C2)
        assert (len(w1), len(w2)) == (2**11, 2**9)
        rel = sorted([oracle.relative_weight(w1, oracle.dual(w2, 15)),
                      oracle.relative_weight(w2, oracle.dual(w1, 15))])  # fmt: skip
        assert rel == [3, 3] == [rec.dx.value, rec.dz.value]


def test_criterion_3_genpoly():
    with criterion(3, "generator-polynomial AQEC, f = M_{3,6,12,9}: k = 3", 10):
        C1 = code_from_defset(15, 2, HAMMING15)
        f = next(p for cs, p in factor_xn_minus_1(15, 2) if set(cs.members) == {3, 6, 12, 9})
        assert f == Poly(C1.spec, (1, 1, 1, 1, 1))
        rec = genpoly_aqec(C1, f)
        assert rec.k == 3 == 2 * C1.k - f.degree - 15
        assert rec.dx.exact and rec.dz.exact and rec.dz.value >= rec.dx.value
        assert (rec.dx.value, rec.dz.value) == (3, 5)


def test_criterion_4_euclidean():
    with criterion(4, "Euclidean ASSC from BCH [15,7]: [[15,4,3,4/3]] and [[15,3,4,4/3]]", 10):
        C1 = bch_construct(15, 2, 5)
        assert C1.k == 7
        H = hull(C1)
        assert H.k == 4
        a, b = euclidean_assc(C1)
        assert (a.k, a.r, b.k, b.r) == (4, 3, 3, 4)
        assert (a.dx, a.dz) == (b.dx, b.dz)
        assert a.exact and (a.dx.value, a.dz.value) == (3, 4)
        hw = bits(H)
        assert len(hw) == 16
        pairs = [(u, v) for u in hw for v in hw]
        assert len(pairs) == 2**4 * 2**4
        assert all(oracle.popcount(u & v) % 2 == 0 for u, v in pairs)


def test_criterion_5_algebra():
    rng = random.Random(20240515)
    counts = {"lengths": 0, "codes": 0}
    with criterion(5, "cosets, x^n-1 factorisation, dual involution for q in {2,3,4,5,7,8,9}, n <= 40", 120):
        for q in (2, 3, 4, 5, 7, 8, 9):
            for n in range(1, 41):
                if math.gcd(n, q) != 1:
                    continue
                counts["lengths"] += 1
                cosets = cyclotomic_cosets(n, q)
                members = [m for c in cosets for m in c.members]
                assert sorted(members) == list(range(n))
                pairs = factor_xn_minus_1(n, q)
                prod = Poly.one(pairs[0][1].spec)
                for _, p in pairs:
                    prod = prod * p
                assert prod == Poly.xn_minus_1(prod.spec, n)
                c = len(cosets)
                if 2**c <= 2**12:
                    masks = range(2**c)
                else:
                    masks = rng.sample(range(2**c), 2**12)
                for mask in masks:
                    T = [m for i, cs in enumerate(cosets) if mask >> i & 1 for m in cs.members]
                    C = code_from_defset(n, q, T)
                    D = dual(C)
                    assert dual(D) == C
                    assert C.k + D.k == n
                    counts["codes"] += 1
        expected = sum(1 for q in (2, 3, 4, 5, 7, 8, 9) for n in range(1, 41) if math.gcd(n, q) == 1)
        assert counts["lengths"] == expected
        assert counts["codes"] > 10000


def _span_mod_p(G, q):
    k = G.shape[0]
    coeffs = np.array(list(product(range(q), repeat=k)), dtype=np.int64).reshape(-1, k)
    return coeffs @ G % q


def test_criterion_6_orthogonality():
    # prime q: independent enumeration with integer arithmetic mod q
    with criterion(6, "G H^T = 0 and codeword-level orthogonality, n <= 16, q in {2,3}", 60):
        for q in (2, 3):
            for n in range(1, 17):
                if math.gcd(n, q) != 1:
                    continue
                for C in all_cyclic_codes(n, q):
                    D = dual(C)
                    G = C.generator_matrix.astype(np.int64)
                    H = C.parity_check_matrix.astype(np.int64)
                    assert check_orthogonal(C, D)
                    if C.k and D.k:
                        assert not (G @ H.T % q).any()
                        small, big = (G, H) if C.k <= D.k else (H, G)
                        words_small = _span_mod_p(small, q)
                        if q**n <= 2**20:
                            words_big = _span_mod_p(big, q)
                            assert not (words_small @ words_big.T % q).any()
                        else:
                            # bilinearity: every word of the smaller code against a basis of the larger
                            assert not (words_small @ big.T % q).any()
                        assert len({w.tobytes() for w in words_small}) == q ** small.shape[0]


def test_criterion_7_bch_bound():
    with criterion(7, "exact min weight >= BCH bound, binary n in {7,15,17,21,23}", 60):
        checked = 0
        for n in (7, 15, 17, 21, 23):
            for C in all_cyclic_codes(n, 2):
                if C.k == 0:
                    continue
                w = min_weight(C)
                assert w.exact
                assert w.value >= bch_bound(C)
                checked += 1
        assert checked == 7 + 31 + 7 + 63 + 7


def test_criterion_8_rs_mds():
    with criterion(8, "Reed-Solomon codes over q in {5,7,8} are MDS", 30):
        for q in (5, 7, 8):
            n = q - 1
            for k in range(1, n + 1):
                w = min_weight(rs_construct(q, k))
                assert w.exact and w.method == "exhaustive"
                assert w.value == n - k + 1


def test_criterion_9_commutation():
    with criterion(9, "HX HZ^T = 0 for criteria 1-4 and search(15, 2) records"):
        H7 = code_from_defset(7, 2, [1, 2, 4])
        C1 = code_from_defset(15, 2, HAMMING15)
        f = next(p for cs, p in factor_xn_minus_1(15, 2) if cs.rep == 3)
        from aqcodes.aqec import css_aqec

        recs = [
            css_aqec(H7, H7),
            defset_aqec(C1, [5, 10]),
            genpoly_aqec(C1, f),
            *euclidean_assc(bch_construct(15, 2, 5)),
            *(e.record for e in search_catalog(15, 2)),
        ]
        for rec in recs:
            s = record_stabilizers(rec)
            hx, hz = s.hx.astype(np.int64), s.hz.astype(np.int64)
            if hx.size and hz.size:
                assert not (hx @ hz.T % 2).any()
        assert len(recs) > 50


def test_criterion_10_roundtrip(tmp_path):
    with criterion(10, "search(15, 2) is byte-identical across runs and every record verifies"):
        cmd = [sys.executable, "-m", "aqcodes", "search", "--n", "15", "--q", "2", "--format", "json"]
        runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
        assert runs[0] == runs[1] and runs[0]
        path = tmp_path / "catalog.jsonl"
        path.write_bytes(runs[0])
        n_records = len(runs[0].splitlines())
        proc = subprocess.run(
            [sys.executable, "-m", "aqcodes", "verify", "--in", str(path)],
            capture_output=True, text=True, check=False,
        )  # fmt: skip
        assert proc.returncode == 0, proc.stderr
        lines = proc.stdout.splitlines()
        assert len(lines) == n_records and all(x.startswith("PASS") for x in lines)
