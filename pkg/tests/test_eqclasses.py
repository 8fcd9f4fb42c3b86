import random

import pytest

from stellax import eqclasses as eq
from stellax.fan import ConePair, cone_order, cones_containing, maximal_cones
from stellax.matroid import (
    Matroid,
    disjoint_bases_pairing,
    dual,
    enumerate_matroids,
    full,
    lex_min_basis,
    minor,
    popcount,
    uniform,
)
from stellax.polymatroid import independence_polytope, lattice_points, point, stellahedron
from stellax.symbolic import MultiPoly


def T_inv(n, i):
    return MultiPoly.var(n, i - 1, -1)


def test_calibrated_sign_is_positive():
    assert eq.calibrate() == 1
    for n in (1, 2, 3):
        assert all(v == 1 for v in eq.calibration_anchors(n, 1).values())


def test_quotient_of_the_loop_matroid():
    for n in (1, 2, 3):
        assert eq.kclass_Q(uniform(0, n)) == eq.sum_of_O1(n)


def test_tautological_values_for_u12():
    M = uniform(1, 2)
    S, Q = eq.kclass_S(M), eq.kclass_Q(M)
    top = ConePair(0b11, ())
    assert S[top] == MultiPoly.const(2, 1) and Q[top] == MultiPoly.const(2, 1)
    s = ConePair(0, (0, 0b01))
    assert S[s] == T_inv(2, 1) and Q[s] == T_inv(2, 2)


def test_polytope_classes():
    assert eq.kclass_of_polytope(point(3)) == eq.one(3)
    cls = eq.kclass_of_polytope(independence_polytope(uniform(1, 2)))
    assert cls[ConePair(0b11, ())] == MultiPoly.const(2, 1)


def test_determinant_of_quotient_is_dual_polytope_class():
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            Q = eq.kclass_Q(M)
            top = eq.exterior_powers(Q)[Q.rank()]
            assert eq.kclass_of_polytope(independence_polytope(dual(M))) == top


def test_k_operations():
    M = uniform(1, 2)
    Q = eq.kclass_Q(M)
    assert Q.dual().dual() == Q
    assert Q.rank() == 1
    assert eq.sym_power(eq.sum_of_O1(2), 1) == eq.sum_of_O1(2)
    assert eq.exterior_powers(eq.sum_of_O1(2))[0] == eq.one(2)


def test_structure_sheaf_localization():
    # alternating exterior powers of the dual quotient: prod over the complement of the
    # lex-min basis of (1 - T_i), and zero when I is dependent
    for M in enumerate_matroids(3):
        O = eq.structure_sheaf_class(M)
        for s in maximal_cones(3):
            if popcount(s.I) > M.rk(s.I):
                assert O[s].is_zero()
                continue
            expected = MultiPoly.const(3, 1)
            B = eq.lex_min_basis_contracted(M, s.I, cone_order(3, s))
            for i in range(3):
                if (full(3) & ~s.I & ~B) >> i & 1:
                    expected = expected * (1 - MultiPoly.var(3, i))
            assert O[s] == expected


def test_structure_sheaf_euler_characteristic():
    assert eq.structure_sheaf_class(uniform(3, 3)) == eq.one(3)
    for n in range(1, 5):
        for M in enumerate_matroids(n):
            assert eq.euler_char(eq.structure_sheaf_class(M)) == 1


def test_zeta_of_structure_sheaf_is_bergman_class():
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            z = eq.zeta(eq.structure_sheaf_class(M))
            assert z.is_polynomial()
            assert eq.minkowski_weight(z, M.rank) == eq.bergman_weight(M)


def test_integrals_of_anchors():
    assert eq.integrate(eq.chow_orbit(1, maximal_cones(1)[0])) == 1
    assert eq.integrate(eq.alpha(2) ** 2) == 1
    assert eq.integrate(eq.ChowClass.constant(2, 1)) == 0
    assert eq.integrate(eq.y(3, 1) * eq.y(3, 2) * eq.y(3, 3)) == 1


def test_total_chern_integrals():
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            assert eq.integrate(eq.chern_Q(M)) == int(M == uniform(0, n))
            assert eq.integrate(eq.chern_S(M)) == int(M == uniform(n, n))


def test_quotient_chern_weight_u12():
    w = eq.minkowski_weight(eq.chern_Q(uniform(1, 2)).component(1), 1)
    assert w.weights == {ConePair(0b01, ()): 1, ConePair(0b10, ()): 1, ConePair(0, (0,)): 1}
    assert eq.is_balanced(w)


def test_fundamental_class_weight():
    w = eq.minkowski_weight(eq.ChowClass.constant(3, 1), 3)
    assert set(w.weights) == set(maximal_cones(3)) and set(w.weights.values()) == {1}


def test_bergman_weights_balanced():
    for n in range(1, 5):
        for M in enumerate_matroids(n):
            assert eq.is_balanced(eq.bergman_weight(M))


def test_unbalanced_weight_detected():
    w = eq.MinkowskiWeight(2, 1, {ConePair(0b01, ()): 1})
    assert not eq.is_balanced(w)


def test_exceptional_maps_on_units():
    assert eq.zeta(eq.one(2)) == eq.ChowClass.constant(2, 1)
    assert eq.phi(eq.one(2)) == eq.ChowClass.constant(2, 1)


def test_phi_of_simplex_class():
    for n in (1, 2, 3):
        cls = eq.kclass_of_polytope(independence_polytope(uniform(1, n)))
        assert eq.phi(cls) == eq.ChowClass.constant(n, 1) + eq.alpha(n)


def test_alpha_is_sum_of_boundary_divisors():
    for n in (1, 2, 3):
        total = eq.ChowClass.constant(n, 0)
        for S in range(full(n)):
            total = total + eq.chow_divisor(n, ("S", S))
        assert total == eq.alpha(n)


def test_exceptional_maps_on_dual_polytope_classes():
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            cls = eq.kclass_of_polytope(independence_polytope(dual(M)))
            assert eq.phi(cls) == eq.chern_Q(M)
            # zeta gives the inverse of c(Q^dual)
            assert eq.zeta(cls) * eq.chern(eq.kclass_Q(M).dual()) == eq.ChowClass.constant(n, 1)


def test_euler_characteristics():
    assert eq.euler_char(eq.one(3)) == 1
    assert eq.euler_char(eq.kclass_of_polytope(stellahedron(2))) == 8
    assert eq.euler_char(eq.structure_sheaf_class(uniform(1, 2))) == 1


def test_directions_agree_across_seeds():
    xi = eq.kclass_of_polytope(stellahedron(3))
    assert {eq.euler_char(xi, seed=s) for s in range(4)} == {len(lattice_points(stellahedron(3)))}


def test_restrict_to_perm():
    for M in enumerate_matroids(3):
        for order, p in eq.restrict_to_perm(eq.kclass_S(M)).items():
            B = lex_min_basis(M, order)
            expected = MultiPoly.zero(3)
            for i in range(3):
                if B >> i & 1:
                    expected = expected + T_inv(3, i + 1)
            assert p == expected


def test_restrict_to_stratum_matches_contraction():
    n = 3
    for M in enumerate_matroids(n):
        for I in range(1, 1 << n):
            tau = ConePair(I, ())
            N = minor(M, full(n), I)
            labels = N.labels
            SN = eq.kclass_S(N)
            images = [MultiPoly.var(n, l - 1) for l in labels]
            for s in cones_containing(n, tau):
                keep = [l - 1 for l in labels]

                def squeeze(mask):
                    return sum(1 << k for k, j in enumerate(keep) if mask >> j & 1)

                small = ConePair(squeeze(s.I & ~I), tuple(squeeze(F) for F in s.chain))
                if N.n:
                    lifted = SN[small].substitute(images) + M.rk(I)
                else:
                    lifted = MultiPoly.const(n, SN[small].constant_term() + M.rk(I))
                assert eq.kclass_S(M)[s] == lifted


def test_loop_kills_permutohedral_part():
    M = Matroid(3, (0b011, 0b101))
    loopy = Matroid(3, (0b001,))
    assert all(("S", 0) not in c.ray_set() for c in eq.bergman_weight(loopy).weights)
    assert any(("S", 0) in c.ray_set() for c in eq.bergman_weight(M).weights)


def test_wall_congruences_exhaustive():
    for n in (1, 2, 3):
        for M in enumerate_matroids(n):
            for k in (eq.kclass_S(M), eq.kclass_Q(M), eq.structure_sheaf_class(M)):
                assert k.is_valid()
            for c in (eq.chern_S(M), eq.chern_Q(M), eq.segre_Q(M)):
                assert c.is_valid()


def test_wall_congruences_sampled_n4():
    rng = random.Random(0)
    ms = enumerate_matroids(4)
    for M in rng.sample(ms, 6):
        assert eq.kclass_S(M).is_valid() and eq.chern_Q(M).is_valid()


def test_wall_violation_detected():
    M = uniform(1, 2)
    bad = eq.kclass_S(M)
    s = maximal_cones(2)[0]
    bad.loc = dict(bad.loc)
    bad.loc[s] = bad.loc[s] + MultiPoly.var(2, 0)
    assert not bad.is_valid()


def test_ring_homomorphisms():
    rng = random.Random(1)
    gens = [eq.sum_of_O1(3)] + [eq.kclass_S(M) for M in enumerate_matroids(3)]
    for _ in range(10):
        a, b = rng.choice(gens), rng.choice(gens)
        assert eq.zeta(a * b) == eq.zeta(a) * eq.zeta(b)
        assert eq.phi(a * b) == eq.phi(a) * eq.phi(b)
    for g in gens:
        assert eq.D_A(eq.phi(g.dual())) == eq.zeta(g)


def test_lattice_sum_identity():
    for n in (1, 2):
        for P in (stellahedron(n), independence_polytope(uniform(1, n))):
            assert all(p.is_zero() for p in eq.lattice_sum_identity(P).loc.values())


def test_intersection_pairing_degree_zero():
    for n in (2, 3):
        ms = enumerate_matroids(n)
        for M in ms:
            for N in ms:
                if M.rank + N.rank == n:
                    cls = eq.chern_Q(M).component(n - M.rank) * eq.chern_Q(N).component(n - N.rank)
                    assert eq.integrate(cls) == disjoint_bases_pairing(M, N)


def test_non_simple_roots_rejected():
    with pytest.raises(eq.LocalizationError):
        eq.exterior_powers(-eq.one(2))


def test_json_dump():
    d = eq.kclass_S(uniform(1, 2)).to_json()
    assert d["I=[]|chain=[[],[1]]"] == "T1^-1"
