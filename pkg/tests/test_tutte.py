import pytest
import sympy

from stellax.matroid import direct_sum, enumerate_matroids, graphic, uniform
from stellax.symbolic import MultiPoly
from stellax.tutte import (
    T4_NAMES,
    contraction_lemma_sides,
    logconcave_check,
    lorentzian_check,
    postnikov_shapiro,
    rank_generating,
    shift,
    sq_intersection,
    sq_intersection_via_localization,
    t4,
    t4_via_localization,
    tutte,
    tutte_deletion_contraction,
    tutte_via_localization,
)


def xy(s):
    return MultiPoly(2, s)


def test_tutte_small():
    assert str(tutte(uniform(1, 2))) == "x+y"
    for n in range(4):
        assert tutte(uniform(n, n)).poly == MultiPoly.monomial((n, 0))
    assert tutte(uniform(2, 4)).poly == xy({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})
    assert tutte(uniform(2, 4))(1, 1) == 6


def test_deletion_contraction_matches_corank_nullity():
    for n in range(1, 5):
        for M in enumerate_matroids(n):
            assert tutte_deletion_contraction(M) == tutte(M).poly


def test_localization_u12():
    T = tutte_via_localization(uniform(1, 2))
    assert str(T) == "u+v+2"
    assert tutte_via_localization(uniform(2, 4)).poly.constant_term() == 6


def test_sq_intersection():
    M = uniform(1, 2)
    assert sq_intersection(M, 0) == MultiPoly.monomial((1, 0))
    assert sq_intersection(M, 0b11) == MultiPoly.monomial((0, 1))
    U = uniform(2, 3)
    assert sq_intersection(U, 0b001) == MultiPoly.monomial((1, 0))
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            for I in range(1 << n):
                assert sq_intersection_via_localization(M, I) == sq_intersection(M, I)


def test_rank_generating_identity_n2():
    for M in enumerate_matroids(2):
        total = MultiPoly.zero(4)
        for I in range(4):
            mono = sq_intersection_via_localization(M, I)
            for e, c in mono.terms.items():
                total = total + MultiPoly.monomial(e + (I & 1, I >> 1 & 1), c)
        assert total == rank_generating(M)


def test_t4_u12_and_homogeneity():
    x, y, z, w = (MultiPoly.var(4, i) for i in range(4))
    expected = (x + y) * (x + w) + (y + z) * (x + y + z + w)
    assert t4(uniform(1, 2)) == expected
    for M in enumerate_matroids(3):
        assert {sum(e) for e in t4(M).terms} == {3}


def test_localization_formulas_n3():
    for M in enumerate_matroids(3):
        assert tutte_via_localization(M).poly == shift(tutte(M)).poly
        assert t4_via_localization(M) == t4(M)


def test_localization_graphic_n5():
    M = graphic([(1, 2), (2, 3), (3, 1), (3, 4), (4, 1)])
    assert M.n == 5 and t4_via_localization(M) == t4(M)


def test_t4_multiplicative():
    for M in enumerate_matroids(2):
        for N in enumerate_matroids(2):
            assert t4(direct_sum(M, N)) == t4(M) * t4(N)


def test_contraction_lemma_u12():
    z, w = sympy.symbols("z w")
    lhs, rhs = contraction_lemma_sides(uniform(1, 2), sympy.Integer(1), z - 1, w + 1, sympy.Integer(0))
    assert sympy.simplify(lhs - rhs) == 0


def test_lorentzian_examples():
    x, y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    assert lorentzian_check((x + y) ** 2)
    assert not lorentzian_check(x ** 2 + y ** 2)
    assert lorentzian_check(t4(uniform(1, 2)))
    assert not lorentzian_check(x ** 2 - y ** 2)


def test_lorentzian_support_condition():
    x, y, z = (MultiPoly.var(3, i) for i in range(3))
    assert not lorentzian_check(x * x + y * z).ok  # support {2e1, e2+e3} is not M-convex


def test_lorentzian_rejects_inhomogeneous():
    x = MultiPoly.var(1, 0)
    with pytest.raises(ValueError):
        lorentzian_check(x + 1)


def test_postnikov_shapiro():
    assert postnikov_shapiro(uniform(1, 2)) == [1, 1, 1]
    for n in range(4):
        assert postnikov_shapiro(uniform(n, n)) == [1]
    for n in range(1, 5):
        for M in enumerate_matroids(n):
            assert logconcave_check(postnikov_shapiro(M))
    assert not logconcave_check([1, 0, 1])
    assert not logconcave_check([1, 3, 1, 3])


def test_t4_lorentzian_n3():
    for M in enumerate_matroids(3):
        assert lorentzian_check(t4(M)), t4(M).to_str(T4_NAMES)
