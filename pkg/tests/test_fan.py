import itertools

from stellax.fan import (
    ConePair,
    all_cones,
    augmented_bergman_fan,
    bergman_fan,
    dual_basis,
    generator,
    generator_det,
    maximal_cones,
    parse_cone,
    rays,
    star,
    tangent_frame,
    walls,
)
from stellax.matroid import Matroid, uniform


def test_counts():
    assert [len(maximal_cones(n)) for n in range(1, 5)] == [2, 5, 16, 65]
    assert [len(all_cones(n)) for n in range(1, 5)] == [3, 11, 51, 299]
    assert [len(walls(n)) for n in range(1, 5)] == [1, 5, 24, 130]
    assert set(maximal_cones(1)) == {ConePair(1, ()), ConePair(0, (0,))}


def test_walls_small():
    (w,) = walls(1)
    assert w.tau == ConePair(0, ()) and w.v == (1,)
    kinds = [w.kind for w in walls(2)]
    assert kinds.count(1) == 1 and kinds.count(2) == 4
    (w1,) = [w for w in walls(2) if w.kind == 1]
    assert w1.tau == ConePair(0, (0,)) and w1.v == (1, -1)


def test_unimodular():
    for n in range(1, 5):
        for s in maximal_cones(n):
            assert abs(generator_det(n, s)) == 1


def test_tangent_frames():
    f = tangent_frame(1, ConePair(1, ()), sign=1)
    assert f.weights == ((1,),)
    f = tangent_frame(1, ConePair(0, (0,)), sign=1)
    assert f.weights == ((-1,),)
    s = ConePair(0, (0, 0b01))
    assert [generator(2, r) for r in s.rays()] == [(-1, -1), (0, -1)]
    ub = dual_basis(2, s)
    for r, u in ub.items():
        for r2 in s.rays():
            assert sum(a * b for a, b in zip(u, generator(2, r2))) == int(r == r2)


def _is_face(c, of):
    return c.ray_set() <= of.ray_set()


def test_fan_closed_under_faces_and_intersections():
    for n in range(1, 4):
        cs = set(all_cones(n))
        keyed = {c.ray_set(): c for c in cs}
        for c in cs:
            for k in range(len(c.rays()) + 1):
                for sub in itertools.combinations(c.rays(), k):
                    assert frozenset(sub) in keyed
        for a in cs:
            for b in cs:
                assert (a.ray_set() & b.ray_set()) in keyed


def test_minimal_non_faces():
    n = 4
    faces = {c.ray_set() for c in all_cones(n)}
    rs = rays(n)
    for a, b in itertools.combinations(rs, 2):
        pair_is_face = frozenset((a, b)) in faces
        if a[0] == "e" and b[0] == "e":
            assert pair_is_face
        elif a[0] == "S" and b[0] == "S":
            comparable = a[1] & b[1] in (a[1], b[1])
            assert pair_is_face == comparable
        else:
            i, S = (a[1], b[1]) if a[0] == "e" else (b[1], a[1])
            assert pair_is_face == bool(S >> (i - 1) & 1)
    # there are no minimal non-faces of size three or more: pairwise faces are faces
    for trip in itertools.combinations(rs, 3):
        if all(frozenset(p) in faces for p in itertools.combinations(trip, 2)):
            assert frozenset(trip) in faces


def test_star():
    assert [f.kind for f in star(3, ConePair(0, (0,)))] == ["permutohedral"]
    (f,) = star(2, ConePair(0b01, ()))
    assert f.kind == "stellahedral" and f.ground == (2,)
    assert star(2, maximal_cones(2)[0]) == []


def test_augmented_bergman_fan():
    top = augmented_bergman_fan(uniform(1, 2), 1)
    assert set(top) == {ConePair(0b01, ()), ConePair(0b10, ()), ConePair(0, (0,))}
    # U_{n,n}: every subset is an independent flat
    full = augmented_bergman_fan(uniform(2, 2), 2)
    assert len(full) == len(maximal_cones(2))
    loopy = Matroid(2, (0b01,))
    assert bergman_fan(loopy) == []
    assert bergman_fan(uniform(2, 3))


def test_cone_keys_round_trip():
    for c in all_cones(3):
        assert parse_cone(c.key()) == c
