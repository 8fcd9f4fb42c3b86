import random
from fractions import Fraction

import pytest

from stellax.matroid import Matroid, enumerate_matroids, uniform
from stellax.polymatroid import (
    EmptySliceError,
    IndicatorCombo,
    Polymatroid,
    PolymatroidError,
    base_polytope_vertices,
    cube_slice,
    face_points,
    independence_polytope,
    indicator_check,
    indicator_is_zero,
    lattice_points,
    membership,
    minkowski_sum,
    stellahedron,
    tile_into_independence_polytopes,
    vertices,
)
from stellax.valuative import octahedron_split

PENTAGON = [(0, 0), (0, 2), (1, 2), (2, 0), (2, 1)]


def test_independence_polytope():
    assert independence_polytope(uniform(1, 2)).f == (0, 1, 1, 1)
    assert independence_polytope(uniform(3, 3)).f == tuple(bin(S).count("1") for S in range(8))
    assert sorted(base_polytope_vertices(uniform(1, 2))) == [(0, 1), (1, 0)]


def test_stellahedron_pentagon():
    assert vertices(stellahedron(2)) == PENTAGON
    assert minkowski_sum(independence_polytope(uniform(1, 2)),
                         independence_polytope(uniform(2, 2))) == stellahedron(2)
    assert vertices(stellahedron(1)) == [(0,), (1,)]


def test_lattice_points_and_membership():
    assert len(lattice_points(stellahedron(2))) == 8
    assert membership((Fraction(1, 2), Fraction(1, 2)), independence_polytope(uniform(1, 2)))
    assert lattice_points(independence_polytope(uniform(1, 2))) == [(0, 0), (0, 1), (1, 0)]


def test_validation():
    with pytest.raises(PolymatroidError):
        Polymatroid(2, (0, 1, 1, 3))  # not submodular
    with pytest.raises(PolymatroidError):
        Polymatroid(2, (0, 2, 2, 1))  # not monotone
    with pytest.raises(PolymatroidError):
        Polymatroid(1, (1, 1))


def test_cube_slice():
    assert cube_slice(stellahedron(2), (0, 0)) == (uniform(2, 2), (0, 0))
    assert cube_slice(independence_polytope(uniform(1, 2)), (0, 0)) == (uniform(1, 2), (0, 0))
    N, u = cube_slice(stellahedron(2), (1, 1))
    assert N.rank_table == (0, 1, 1, 1) and u == (1, 1)
    with pytest.raises(EmptySliceError):
        cube_slice(independence_polytope(uniform(1, 2)), (1, 1))


def test_cube_slices_are_unit_increment():
    P = stellahedron(3)
    for u in lattice_points(P):
        N, _ = cube_slice(P, u)
        rt = N.rank_table
        assert all(rt[S | 1 << i] - rt[S] in (0, 1) for S in range(8) for i in range(3))


def test_tiling():
    for M in (uniform(1, 2), uniform(2, 3)):
        combo = tile_into_independence_polytopes(independence_polytope(M))
        assert len(combo.terms) == 1 and combo.terms[0].coef == 1
    assert len(tile_into_independence_polytopes(stellahedron(1)).terms) == 1
    for n in (2, 3):
        P = stellahedron(n)
        diff = tile_into_independence_polytopes(P) - IndicatorCombo(n).add(1, P)
        assert indicator_is_zero(diff)


def test_indicator_oracle():
    U = uniform(1, 2)
    assert indicator_is_zero(IndicatorCombo.of_matroids([(1, U), (-1, U)]))
    assert indicator_is_zero(IndicatorCombo.of_matroids(octahedron_split().terms))
    v = indicator_check(IndicatorCombo.of_matroids([(1, U), (-1, Matroid(2, (0b01,)))]))
    assert not v.zero and v.complete and v.witness is not None


def test_indicator_dropping_a_piece_is_nonzero():
    terms = octahedron_split().terms[:-1]
    assert not indicator_is_zero(IndicatorCombo.of_matroids(terms))


def test_face_points_hit_every_face_of_the_octahedron():
    X, scale = face_points(4, (0, 0, 0, 0), (1, 1, 1, 1), 2)
    assert scale > 0 and len(X) > 26  # at least vertices, edges, facets and interior


def test_strong_normality():
    rng = random.Random(3)
    for _ in range(15):
        n = rng.randint(1, 3)
        ms = enumerate_matroids(n)
        P = independence_polytope(rng.choice(ms))
        Q = independence_polytope(rng.choice(ms))
        S = minkowski_sum(P, Q)
        lp, lq = lattice_points(P), lattice_points(Q)
        sums = {tuple(a + b for a, b in zip(p, q)) for p in lp for q in lq}
        assert set(lattice_points(S)) == sums


def test_minkowski_support_function():
    rng = random.Random(5)
    for _ in range(10):
        ms = enumerate_matroids(3)
        P = independence_polytope(rng.choice(ms))
        Q = independence_polytope(rng.choice(ms))
        S = minkowski_sum(P, Q)
        verts = vertices(S)
        for mask in range(1, 8):
            best = max(sum(v[i] for i in range(3) if mask >> i & 1) for v in verts)
            assert best == P.f[mask] + Q.f[mask]
