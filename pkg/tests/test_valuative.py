import random

import pytest

from stellax.matroid import Matroid, MatroidError, disjoint_bases_pairing, enumerate_matroids, is_schubert, schubert, uniform
from stellax.polymatroid import independence_polytope, point
from stellax.valuative import (
    METHODS,
    MatroidCombo,
    decompose_in_schubert_basis,
    octahedron_split,
    is_valuatively_zero,
    monomial_basis,
    monomial_to_matroid,
    pairing_det,
    pairing_matrix,
    schubert_basis,
    single,
    val_to_polytope_class,
    valuative_witness,
)

E1 = Matroid(2, (0b01,))
E2 = Matroid(2, (0b10,))


def test_schubert_basis_small():
    assert schubert_basis(2, 1) == (E1, E2, uniform(1, 2))
    for n in range(4):
        assert schubert_basis(n, 0) == (uniform(0, n),)
        assert schubert_basis(n, n) == (uniform(n, n),)


def test_pairing_matrices():
    assert pairing_matrix(2, 1) == ((0, 1, 1), (1, 0, 1), (1, 1, 1))
    assert pairing_det(2, 1) == 1
    assert pairing_matrix(1, 0) == ((1,),)
    assert pairing_matrix(2, 0) == ((1,),)


def test_unimodular_and_counts():
    for n in range(5):
        for r in range(n + 1):
            assert abs(pairing_det(n, r)) == 1
            assert len(schubert_basis(n, r)) == len(monomial_basis(n, n - r))


def test_monomials_give_schubert_matroids():
    for n in range(1, 5):
        for d in range(n + 1):
            basis = set(schubert_basis(n, n - d))
            images = {monomial_to_matroid(n, m) for m in monomial_basis(n, d)}
            assert images == basis


def test_decompose():
    dec = decompose_in_schubert_basis(uniform(1, 2))
    assert dec.coeffs == (0, 0, 1) and dec.certified
    S = schubert((2, 1, 3), {1, 3})
    dec = decompose_in_schubert_basis(S)
    assert sorted(dec.coeffs) == [0] * (len(dec.coeffs) - 1) + [1]
    # the pyramid matroid of the octahedron split is not Schubert
    M_C = octahedron_split().terms[3][1]
    assert not is_schubert(M_C)
    dec = decompose_in_schubert_basis(M_C, certify=True)
    assert dec.certified and sum(1 for c in dec.coeffs if c) > 1


def test_decompositions_certified_exhaustively():
    for n in range(1, 4):
        for M in enumerate_matroids(n):
            assert decompose_in_schubert_basis(M).certified


def test_trivial_and_octahedron_relations():
    U = uniform(2, 4)
    for m in METHODS:
        assert is_valuatively_zero(single(U) - single(U), m)
        assert is_valuatively_zero(octahedron_split(), m)
    assert is_valuatively_zero(octahedron_split(), "all")


def test_non_relation_witness():
    eta = single(uniform(1, 2)) - single(E1)
    for m in METHODS:
        assert not is_valuatively_zero(eta, m)
    w = valuative_witness(eta, "numerical")
    assert w["pair_with"] == E1.to_json()


def test_three_way_agreement_random_combos():
    rng = random.Random(7)
    for n in (2, 3):
        ms = enumerate_matroids(n)
        for _ in range(60):
            M = rng.choice(ms)
            same = [x for x in ms if x.rank == M.rank]
            eta = single(M, rng.randint(-2, 2))
            for _ in range(rng.randint(0, 4)):
                eta = eta + single(rng.choice(same), rng.randint(-2, 2))
            is_valuatively_zero(eta, "all")  # raises on disagreement


def test_homological_numerical_agree_n4():
    rng = random.Random(8)
    ms = enumerate_matroids(4)
    for _ in range(40):
        M = rng.choice(ms)
        same = [x for x in ms if x.rank == M.rank]
        eta = single(M) - single(rng.choice(same))
        assert is_valuatively_zero(eta, "homological") == is_valuatively_zero(eta, "numerical")


def test_numerical_against_whole_corpus():
    for n in (2, 3):
        ms = enumerate_matroids(n)
        for M in ms:
            eta = decompose_in_schubert_basis(M).relation()
            for N in ms:
                if N.rank == n - M.rank:
                    assert sum(c * disjoint_bases_pairing(A, N) for c, A in eta.terms) == 0


def test_rank_homogeneity_enforced():
    with pytest.raises(MatroidError):
        MatroidCombo([(1, uniform(1, 2)), (1, uniform(2, 2))])


def test_unknown_method():
    with pytest.raises(ValueError):
        is_valuatively_zero(single(uniform(1, 2)), "magic")


def test_val_to_polytope_class():
    assert val_to_polytope_class(uniform(1, 2)) == independence_polytope(uniform(1, 2))
    assert val_to_polytope_class(uniform(2, 2)) == point(2)
    assert val_to_polytope_class(uniform(2, 4)) == independence_polytope(uniform(2, 4))
