import itertools
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from salvetti.homology import (
    LAURENT,
    QQ,
    ZZ,
    ChainComplex,
    ChainComplexError,
    HomologyModule,
    homology,
    smith_normal_form,
)
from salvetti.laurent import LaurentPoly, q_integer

small_mats = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


def minor_gcd_factors(M):
    """Invariant factors from determinantal divisors: d_k = D_k / D_(k-1)."""
    rows, cols = len(M), len(M[0])
    D = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for R in itertools.combinations(range(rows), k):
            for C in itertools.combinations(range(cols), k):
                g = gcd(g, int(sympy.Matrix([[M[i][j] for j in C] for i in R]).det()))
        if g == 0:
            break
        D.append(g)
    return [D[k] // D[k - 1] for k in range(1, len(D))]


@settings(max_examples=150, deadline=None)
@given(small_mats)
def test_snf_matches_determinantal_divisors(M):
    factors, r = smith_normal_form(M, ZZ)
    assert factors == minor_gcd_factors(M)
    assert r == sympy.Matrix(M).rank()
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(max_examples=50, deadline=None)
@given(small_mats)
def test_rational_rank(M):
    factors, r = smith_normal_form(M, QQ)
    assert r == sympy.Matrix(M).rank() and all(f == 1 for f in factors)


def test_snf_divisibility_fixup():
    assert smith_normal_form([[2, 0], [0, 3]], ZZ) == ([1, 6], 2)
    assert smith_normal_form([[4, 0, 0], [0, 6, 0], [0, 0, 10]], ZZ) == ([2, 2, 60], 3)


def test_laurent_snf():
    a, b = q_integer(2), q_integer(3)
    factors, r = smith_normal_form([[a, LaurentPoly()], [LaurentPoly(), b]], LAURENT)
    assert r == 2 and factors == [1, a * b]
    q = LaurentPoly.q()
    factors, _ = smith_normal_form([[q ** -2 * a * 3]], LAURENT)
    assert factors == [a]


def _circle():
    return ChainComplex([["v"], ["e"]], {1: [[0]]}, "ZZ")


def _rp2():
    # one cell per dimension, boundaries 0 and 2
    return ChainComplex([["v"], ["e"], ["f"]], {1: [[0]], 2: [[2]]}, "ZZ")


def test_small_complexes():
    assert [str(h) for h in homology(_circle())] == ["Z", "Z"]
    assert [str(h) for h in homology(_rp2())] == ["Z", "Z/2", "0"]
    rp2_q = _rp2().map_entries(QQ.coerce, "QQ")
    assert [str(h) for h in homology(rp2_q)] == ["Q", "0", "0"]


def test_d_squared_violation_is_reported():
    bad = ChainComplex([["v"], ["e"], ["f"]], {1: [[1]], 2: [[1]]}, "ZZ")
    with pytest.raises(ChainComplexError):
        homology(bad)
    with pytest.raises(ChainComplexError):
        ChainComplex([["v"], ["e"]], {1: [[1, 1]]}, "ZZ").check_shapes()


def test_module_text_and_json():
    h = HomologyModule(1, 2, [2, 6], "ZZ")
    assert str(h) == "Z^2 + Z/2 + Z/6"
    assert h.to_json() == {"degree": 1, "free_rank": 2, "invariant_factors": ["2", "6"],
                           "text": "Z^2 + Z/2 + Z/6"}
    assert str(HomologyModule(0, 0, [q_integer(2)], "LAURENT")) == "R/(1 + q)"
    assert str(HomologyModule(3, 0, [], "QQ")) == "0"
