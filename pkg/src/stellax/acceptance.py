"""Verification suites for the main identities, shared by the test-suite and ``stellax selftest``.

Each ``criterion_k(level)`` returns ``(ok, detail)``.  ``level="full"`` runs the complete
corpus; ``level="fast"`` shrinks the sampled parts for a quick smoke run.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from . import eqclasses as eq
from .matroid import Matroid, enumerate_matroids, graphic, uniform
from .polymatroid import (
    Polymatroid,
    independence_polytope,
    lattice_points,
    minkowski_sum,
    point,
    stellahedron,
)

# corpus bounds per suite; data rather than code so they are easy to widen
BOUNDS = {
    "equivalence_exhaustive_n": 3,
    "equivalence_n": 4,
    "non_relations": 100,
    "intersection_exhaustive_n": 3,
    "intersection_sampled_n": 4,
    "intersection_samples": 200,
    "bergman_n": 4,
    "hrr_n": 3,
    "hrr_polymatroids": 50,
    "tutte_exhaustive_n": 3,
    "lorentzian_n": 4,
    "schubert_n": 4,
    "decompose_certified_n": 3,
    "pushforward_n": 4,
    "csm_localization_n": 3,
    "walls_n": 3,
    "lattice_identity_n": 2,
    "deletion_contraction_n": 4,
}

FAST_SCALE = {"non_relations": 20, "intersection_samples": 30, "hrr_polymatroids": 10}


def _bound(key: str, level: str) -> int:
    if level == "fast" and key in FAST_SCALE:
        return FAST_SCALE[key]
    return BOUNDS[key]


def _matroids(n_max: int, n_min: int = 1) -> list[Matroid]:
    return [M for n in range(n_min, n_max + 1) for M in enumerate_matroids(n)]


# ---------------------------------------------------------------------------


def criterion_1(level: str = "full") -> tuple[bool, str]:
    """Indicator, homological and numerical valuative tests agree."""
    from .valuative import (
        METHODS,
        ValuativeDisagreement,
        decompose_in_schubert_basis,
        octahedron_split,
        is_valuatively_zero,
        single,
    )

    rng = random.Random(1)
    n4 = _bound("equivalence_n", level)
    relations = [octahedron_split()]
    relations += [decompose_in_schubert_basis(M, certify=False).relation() for M in enumerate_matroids(n4)]
    for eta in relations:
        if not all(is_valuatively_zero(eta, m) for m in METHODS):
            return False, f"relation not recognized: {eta.to_json()}"
    ms = enumerate_matroids(n4)
    for _ in range(_bound("non_relations", level)):
        base = rng.choice(relations[1:])
        N = rng.choice([m for m in ms if m.rank == base.rank])
        eta = rng.randint(-3, 3) * base + rng.choice([-2, -1, 1, 2]) * single(N)
        verdicts = [is_valuatively_zero(eta, m) for m in METHODS]
        if any(verdicts):
            return False, f"non-relation accepted ({dict(zip(METHODS, verdicts))}): {eta.to_json()}"
    # exhaustive agreement on small ground sets
    checked = 0
    for n in range(1, _bound("equivalence_exhaustive_n", level) + 1):
        ms = enumerate_matroids(n)
        combos = [single(M) - single(N) for M in ms for N in ms if M.rank == N.rank]
        combos += [decompose_in_schubert_basis(M).relation() for M in ms]
        for _ in range(50):
            M = rng.choice(ms)
            same = [m for m in ms if m.rank == M.rank]
            eta = single(M, rng.randint(-2, 2))
            for _ in range(rng.randint(0, 4)):
                eta = eta + single(rng.choice(same), rng.randint(-2, 2))
            combos.append(eta)
        for eta in combos:
            try:
                is_valuatively_zero(eta, "all")
            except ValuativeDisagreement as exc:
                return False, str(exc)
            checked += 1
    return True, f"{len(relations)} relations, {_bound('non_relations', level)} non-relations, {checked} exhaustive combos"


def criterion_2(level: str = "full") -> tuple[bool, str]:
    """Product of top Chern classes of augmented quotients is the Bergman class of M ∧ M' or zero."""
    count = 0
    for n in range(1, _bound("intersection_exhaustive_n", level) + 1):
        ms = enumerate_matroids(n)
        for M, N in itertools.product(ms, ms):
            if eq.intersection_weight(M, N) != eq.predicted_intersection(M, N):
                return False, f"mismatch for {M} and {N}"
            count += 1
    rng = random.Random(2)
    ms = enumerate_matroids(_bound("intersection_sampled_n", level))
    for _ in range(_bound("intersection_samples", level)):
        M, N = rng.choice(ms), rng.choice(ms)
        if eq.intersection_weight(M, N) != eq.predicted_intersection(M, N):
            return False, f"mismatch for {M} and {N}"
        count += 1
    return True, f"{count} ordered pairs"


def criterion_3(level: str = "full") -> tuple[bool, str]:
    """Top Chern class of the augmented quotient is the balanced augmented Bergman weight."""
    ms = _matroids(_bound("bergman_n", level))
    for M in ms:
        w = eq.minkowski_weight(eq.chern_Q(M).component(M.n - M.rank), M.rank)
        if w != eq.bergman_weight(M):
            return False, f"weight differs from the augmented Bergman fan for {M}"
        if not eq.is_balanced(w):
            return False, f"unbalanced weight for {M}"
    return True, f"{len(ms)} matroids"


def random_polymatroid(n: int, rng: random.Random) -> Polymatroid:
    P = point(n)
    ms = enumerate_matroids(n)
    for _ in range(rng.randint(1, 3)):
        P = minkowski_sum(P, independence_polytope(rng.choice(ms)))
    return P


def _hrr_series(n: int):
    a = eq.alpha(n)
    total = eq.ChowClass.constant(n, 1)
    power = eq.ChowClass.constant(n, 1)
    for _ in range(n):
        power = power * a
        total = total + power
    return total, eq.chern(eq.sum_of_O1(n))


def criterion_4(level: str = "full") -> tuple[bool, str]:
    """chi = ∫ phi(·) c(⊕ O(1)) = ∫ zeta(·)(1 + alpha + ... + alpha^n); chi counts lattice points."""
    rng = random.Random(4)
    n_max = _bound("hrr_n", level)
    cases = []
    for _ in range(_bound("hrr_polymatroids", level)):
        n = rng.randint(1, n_max)
        P = random_polymatroid(n, rng)
        cases.append((eq.kclass_of_polytope(P), len(lattice_points(P)), f"polymatroid {P.f}"))
    for M in _matroids(n_max):
        cases.append((eq.structure_sheaf_class(M), 1, f"structure sheaf of {M}"))
    series = {}
    for xi, expected, label in cases:
        if xi.n not in series:
            series[xi.n] = _hrr_series(xi.n)
        alpha_sum, c_o1 = series[xi.n]
        chi = eq.euler_char(xi)
        via_phi = eq.integrate(eq.phi(xi) * c_o1)
        via_zeta = eq.integrate(eq.zeta(xi) * alpha_sum)
        if not chi == via_phi == via_zeta == expected:
            return False, f"{label}: chi={chi}, phi side={via_phi}, zeta side={via_zeta}, expected {expected}"
    return True, f"{len(cases)} classes"


def criterion_5(level: str = "full") -> tuple[bool, str]:
    """Tutte polynomial and its homogenization from localization."""
    from .tutte import shift, t4, t4_via_localization, tutte, tutte_via_localization

    ms = _matroids(_bound("tutte_exhaustive_n", level))
    samples = [uniform(r, n) for n in (4, 5) for r in range(n + 1)]
    samples += [
        graphic([(1, 2), (2, 3), (3, 1), (3, 4)]),
        graphic([(1, 2), (2, 3), (3, 4), (4, 1)]),
        graphic([(1, 2), (1, 2), (2, 3), (3, 3)]),
        graphic([(1, 2), (2, 3), (3, 1), (3, 4), (4, 1)]),
        graphic([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),
    ]
    if level == "fast":
        samples = samples[:6]
    for M in ms + samples:
        if tutte_via_localization(M).poly != shift(tutte(M)).poly:
            return False, f"rank-generating formula fails for {M}"
        if t4_via_localization(M) != t4(M):
            return False, f"homogenized formula fails for {M}"
    return True, f"{len(ms)} exhaustive + {len(samples)} sampled matroids"


def criterion_6(level: str = "full") -> tuple[bool, str]:
    """Homogenized Tutte polynomial is denormalized Lorentzian; Postnikov-Shapiro sequences log-concave."""
    from .tutte import logconcave_check, lorentzian_check, postnikov_shapiro, t4

    ms = _matroids(_bound("lorentzian_n", level))
    for M in ms:
        v = lorentzian_check(t4(M))
        if not v:
            return False, f"{M}: {v.reason}"
        if not logconcave_check(postnikov_shapiro(M)):
            return False, f"{M}: sequence {postnikov_shapiro(M)} not log-concave"
    return True, f"{len(ms)} matroids"


def criterion_7(level: str = "full") -> tuple[bool, str]:
    """Schubert bases: unimodular pairing, monomial-basis counts, integral certified decompositions."""
    from .valuative import decompose_in_schubert_basis, monomial_basis, pairing_det, schubert_basis

    n_max = _bound("schubert_n", level)
    for n in range(0, n_max + 1):
        for r in range(n + 1):
            if abs(pairing_det(n, r)) != 1:
                return False, f"pairing matrix ({n},{r}) has det {pairing_det(n, r)}"
            if len(schubert_basis(n, r)) != len(monomial_basis(n, n - r)):
                return False, f"cardinality mismatch at ({n},{r})"
    ms = _matroids(_bound("decompose_certified_n", level))
    for M in ms:
        d = decompose_in_schubert_basis(M, certify=True)
        if not d.certified:
            return False, f"decomposition of {M} not certified"
    return True, f"n <= {n_max} pairings, {len(ms)} decompositions"


def criterion_8(level: str = "full") -> tuple[bool, str]:
    """CSM pushforward identity and its localization check."""
    from .csm import csm_open_cell, independent_sets_class, pushforward_to_cube, verify_csm_localization

    ms = _matroids(_bound("pushforward_n", level))
    for M in ms:
        if pushforward_to_cube(M, csm_open_cell(M)) != independent_sets_class(M):
            return False, f"pushforward mismatch for {M}"
    small = _matroids(_bound("csm_localization_n", level))
    for M in small:
        ok, bad = verify_csm_localization(M)
        if not ok:
            return False, f"localization mismatch for {M} at subsets {bad}"
    return True, f"{len(ms)} pushforwards, {len(small)} localization checks"


def criterion_9(level: str = "full") -> tuple[bool, str]:
    """A single sign gives the point, alpha^n, y_1...y_n and chi(O) anchors."""
    try:
        s = eq.calibrate((1, 2, 3))
    except eq.CalibrationError as exc:
        return False, str(exc)
    return True, f"sign {s:+d}"


def _k_generators(n: int) -> list:
    out = [eq.sum_of_O1(n)]
    for M in enumerate_matroids(n):
        out += [eq.kclass_S(M), eq.kclass_Q(M)]
    return out


def criterion_10(level: str = "full") -> tuple[bool, str]:
    """Wall congruences, ring-map properties, deletion-contraction, lattice-sum identity."""
    from .tutte import tutte, tutte_deletion_contraction

    rng = random.Random(10)
    walls_checked = 0
    for n in range(1, _bound("walls_n", level) + 1):
        ks = []
        for M in enumerate_matroids(n):
            ks += [eq.kclass_S(M), eq.kclass_Q(M), eq.structure_sheaf_class(M),
                   eq.kclass_of_polytope(independence_polytope(M))]
            cs = [eq.chern_S(M), eq.chern_Q(M), eq.segre_S(M), eq.segre_Q(M)]
            for c in cs:
                if not c.is_valid():
                    return False, f"Chow class of {M} violates a wall congruence"
        ks += [eq.sum_of_O1(n)] + [e for e in eq.exterior_powers(eq.sum_of_O1(n))]
        ks += [eq.kclass_of_polytope(stellahedron(n))]
        for xi in ks:
            if not xi.is_valid():
                return False, "K-class violates a wall congruence"
            walls_checked += 1
        for i in range(1, n + 1):
            extras = [eq.alpha(n), eq.y(n, i), eq.phi(ks[-1]), eq.zeta(ks[-1])]
            if not all(c.is_valid() for c in extras):
                return False, "alpha, y or exceptional image violates a wall congruence"
        gens = _k_generators(n)
        for _ in range(10):
            a, b = rng.choice(gens), rng.choice(gens)
            if eq.zeta(a * b) != eq.zeta(a) * eq.zeta(b) or eq.phi(a * b) != eq.phi(a) * eq.phi(b):
                return False, "exceptional map is not multiplicative"
            if eq.zeta(a + b) != eq.zeta(a) + eq.zeta(b):
                return False, "zeta is not additive"
        for g in gens:
            if eq.D_A(eq.phi(g.dual())) != eq.zeta(g):
                return False, "D_A ∘ phi ∘ D_K differs from zeta"
    for M in _matroids(_bound("deletion_contraction_n", level)):
        if tutte_deletion_contraction(M) != tutte(M).poly:
            return False, f"deletion-contraction differs from corank-nullity for {M}"
    for n in range(1, _bound("lattice_identity_n", level) + 1):
        for P in (stellahedron(n), independence_polytope(uniform(1, n))):
            if any(not p.is_zero() for p in eq.lattice_sum_identity(P).loc.values()):
                return False, f"lattice-sum identity fails for {P.f}"
    return True, f"{walls_checked} K-classes on walls"


CRITERIA: list[tuple[int, str, Callable[[str], tuple[bool, str]]]] = [
    (1, "valuative-equivalences", criterion_1),
    (2, "bergman-intersection", criterion_2),
    (3, "quotient-top-chern", criterion_3),
    (4, "hrr-formulas", criterion_4),
    (5, "tutte-localization", criterion_5),
    (6, "lorentzian", criterion_6),
    (7, "schubert-basis", criterion_7),
    (8, "csm", criterion_8),
    (9, "calibration", criterion_9),
    (10, "property-suites", criterion_10),
]


def run_all(level: str = "full", only=None) -> list[dict]:
    import time

    out = []
    for k, tag, fn in CRITERIA:
        if only and k not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(level)
        except Exception as exc:  # report, never hide
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append({"criterion": k, "tag": tag, "ok": ok, "detail": detail,
                    "seconds": round(time.perf_counter() - t0, 2)})
    return out
