from stellax.csm import (
    csm_localization_values,
    csm_open_cell,
    csm_schubert_variety,
    independent_sets_class,
    provenance,
    pushforward_matrix_rank,
    pushforward_to_cube,
    verify_csm_localization,
)
from stellax.matroid import Matroid, enumerate_matroids, flats, uniform


def test_open_cell():
    assert csm_open_cell(uniform(1, 2)).coeffs == {0: 1, 0b11: 1}
    assert csm_open_cell(uniform(3, 3)).coeffs == {S: 1 for S in range(8)}
    loopy = Matroid(2, (0b01,))
    assert all(F & 0b10 for F in csm_open_cell(loopy).coeffs)


def test_schubert_variety():
    assert csm_schubert_variety(uniform(1, 2)).coeffs == {0: 2, 0b11: 1}
    assert csm_schubert_variety(uniform(1, 1)).coeffs == {0: 2, 1: 1}
    for M in enumerate_matroids(3):
        c = csm_schubert_variety(M)
        top = max(flats(M), key=M.rk)
        assert c.coeffs[top] == 1
        assert c.is_effective() and csm_open_cell(M).is_effective()


def test_grading():
    g = csm_open_cell(uniform(2, 3)).graded()
    assert sorted(g) == [0, 1, 2] and len(g[1]) == 3


def test_pushforward():
    M = uniform(1, 2)
    assert pushforward_to_cube(M, csm_open_cell(M)) == {0: 1, 0b01: 1, 0b10: 1}
    for n in range(1, 5):
        for M in enumerate_matroids(n):
            assert pushforward_to_cube(M, csm_open_cell(M)) == independent_sets_class(M)


def test_pushforward_injective_u24():
    assert pushforward_matrix_rank(uniform(2, 4)) == len(flats(uniform(2, 4)))


def test_localization():
    vals = csm_localization_values(uniform(1, 2))
    assert vals[0b01] == 1 and vals[0b11] == 0
    assert set(csm_localization_values(uniform(3, 3)).values()) == {1}
    for n in range(1, 4):
        for M in enumerate_matroids(n):
            assert verify_csm_localization(M)[0]


def test_provenance_flag():
    assert provenance(uniform(1, 2)) == "formula"
    assert provenance(uniform(3, 7)) == "formula-extrapolated"
    assert csm_open_cell(uniform(1, 2)).to_json()["provenance"] == "formula"
