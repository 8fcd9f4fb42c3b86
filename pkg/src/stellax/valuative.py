"""The valuative group of rank-r matroids on {1..n}: Schubert bases, the intersection
pairing, integral decomposition and three independent tests for valuative relations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import sympy

from .eqclasses import MinkowskiWeight, bergman_weight
from .matroid import (
    Matroid,
    MatroidError,
    disjoint_bases_pairing,
    dual,
    full,
    intersection,
    popcount,
    schubert,
    _ksubsets,
)
from .polymatroid import IndicatorCombo, Polymatroid, indicator_check, independence_polytope

INDICATOR_MAX_N = 4
DECOMPOSE_MAX_N = 4
CERTIFY_MAX_N = 3

METHODS = ("indicator", "homological", "numerical")


class ValuativeDisagreement(AssertionError):
    pass


@dataclass
class MatroidCombo:
    """An integer combination sum c_i [M_i] of matroids of one rank on one ground set."""

    terms: list[tuple[int, Matroid]] = field(default_factory=list)

    def __post_init__(self):
        if not self.terms:
            raise MatroidError("empty combination; give at least one matroid (possibly with coefficient 0)")
        n, r = self.terms[0][1].n, self.terms[0][1].rank
        for _, M in self.terms:
            if (M.n, M.rank) != (n, r):
                raise MatroidError(f"mixed ground sets or ranks in combination: {(M.n, M.rank)} vs {(n, r)}")

    @property
    def n(self) -> int:
        return self.terms[0][1].n

    @property
    def rank(self) -> int:
        return self.terms[0][1].rank

    def __add__(self, other: "MatroidCombo") -> "MatroidCombo":
        return MatroidCombo(self.terms + other.terms)

    def __sub__(self, other: "MatroidCombo") -> "MatroidCombo":
        return MatroidCombo(self.terms + [(-c, M) for c, M in other.terms])

    def __rmul__(self, k: int) -> "MatroidCombo":
        return MatroidCombo([(k * c, M) for c, M in self.terms])

    def simplified(self) -> "MatroidCombo":
        acc: dict[Matroid, int] = {}
        for c, M in self.terms:
            acc[M] = acc.get(M, 0) + c
        kept = [(c, M) for M, c in acc.items() if c]
        return MatroidCombo(kept or [(0, self.terms[0][1])])

    def to_json(self) -> list:
        return [{"coef": c, "matroid": M.to_json()} for c, M in self.terms]


def single(M: Matroid, c: int = 1) -> MatroidCombo:
    return MatroidCombo([(c, M)])


def octahedron_split() -> MatroidCombo:
    """U_{2,4} - M_A - M_B + M_C from cutting the octahedron P(U_{2,4}) into two pyramids."""
    pairs = _ksubsets(4, 2)
    M_A = Matroid.from_bases(4, [b for b in pairs if b != 0b0011])
    M_B = Matroid.from_bases(4, [b for b in pairs if b != 0b1100])
    M_C = Matroid.from_bases(4, [b for b in pairs if popcount(b & 0b0011) == 1])
    U = Matroid(4, tuple(pairs))
    return MatroidCombo([(1, U), (-1, M_A), (-1, M_B), (1, M_C)])


# ---------------------------------------------------------------------------
# Schubert basis and pairing


def _basis_key(M: Matroid):
    return (len(M.bases), M.bases)


@lru_cache(maxsize=None)
def schubert_basis(n: int, r: int) -> tuple[Matroid, ...]:
    if not 0 <= r <= n:
        raise MatroidError(f"rank {r} out of range for n={n}")
    seen = set()
    for order in itertools.permutations(range(1, n + 1)):
        for I in _ksubsets(n, r):
            seen.add(schubert(order, I))
    return tuple(sorted(seen, key=_basis_key))


@lru_cache(maxsize=None)
def pairing_matrix(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    rows = schubert_basis(n, r)
    cols = schubert_basis(n, n - r)
    return tuple(tuple(disjoint_bases_pairing(S, T) for T in cols) for S in rows)


def pairing_det(n: int, r: int) -> int:
    return int(sympy.Matrix(pairing_matrix(n, r)).det())


@dataclass
class Decomposition:
    matroid: Matroid
    basis: tuple[Matroid, ...]
    coeffs: tuple[int, ...]
    certified: bool | None

    def relation(self) -> MatroidCombo:
        """M - sum c_i S_i, which is valuatively zero."""
        terms = [(1, self.matroid)] + [(-c, S) for c, S in zip(self.coeffs, self.basis) if c]
        return MatroidCombo(terms)

    def to_json(self) -> dict:
        return {
            "matroid": self.matroid.to_json(),
            "basis": [S.to_json() for S in self.basis],
            "coeffs": list(self.coeffs),
            "certified": self.certified,
        }


def decompose_in_schubert_basis(M: Matroid, certify: bool | None = None) -> Decomposition:
    n, r = M.n, M.rank
    if n > DECOMPOSE_MAX_N:
        raise MatroidError(f"decomposition is limited to n <= {DECOMPOSE_MAX_N}")
    basis = schubert_basis(n, r)
    P = sympy.Matrix(pairing_matrix(n, r))
    b = sympy.Matrix([disjoint_bases_pairing(M, T) for T in schubert_basis(n, n - r)])
    sol = P.T.LUsolve(b)
    if any(not x.is_integer for x in sol):
        raise ArithmeticError(f"non-integral Schubert coefficients {list(sol)} for {M}")
    coeffs = tuple(int(x) for x in sol)
    dec = Decomposition(M, basis, coeffs, None)
    if certify is None:
        certify = n <= CERTIFY_MAX_N
    if certify:
        dec.certified = indicator_check(_indicator_combo(dec.relation())).zero
    return dec


def val_to_polytope_class(M: Matroid) -> Polymatroid:
    return independence_polytope(dual(M))


# ---------------------------------------------------------------------------
# the three tests


def _indicator_combo(eta: MatroidCombo) -> IndicatorCombo:
    return IndicatorCombo.of_matroids(eta.terms)


def homological_weight(eta: MatroidCombo) -> MinkowskiWeight:
    total = MinkowskiWeight(eta.n, eta.rank)
    for c, M in eta.terms:
        if c:
            total = total + c * bergman_weight(M)
    return total


def numerical_pairings(eta: MatroidCombo) -> list[tuple[Matroid, int]]:
    out = []
    for T in schubert_basis(eta.n, eta.n - eta.rank):
        out.append((T, sum(c * disjoint_bases_pairing(M, T) for c, M in eta.terms)))
    return out


def valuative_witness(eta: MatroidCombo, method: str):
    """None if the test says eta = 0, otherwise a witness of non-vanishing."""
    if method == "indicator":
        if eta.n > INDICATOR_MAX_N:
            raise MatroidError(f"indicator test is limited to n <= {INDICATOR_MAX_N}")
        v = indicator_check(_indicator_combo(eta))
        return None if v.zero else {"point": [str(x) for x in v.witness]}
    if method == "homological":
        w = homological_weight(eta)
        if w.is_zero():
            return None
        tau, c = min(w.weights.items())
        return {"cone": tau.key(), "weight": c}
    if method == "numerical":
        for T, v in numerical_pairings(eta):
            if v:
                return {"pair_with": T.to_json(), "value": v}
        return None
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS + ('all',)}")


def is_valuatively_zero(eta: MatroidCombo, method: str = "all") -> bool:
    if method != "all":
        return valuative_witness(eta, method) is None
    results = {m: valuative_witness(eta, m) for m in METHODS if m != "indicator" or eta.n <= INDICATOR_MAX_N}
    verdicts = {m: w is None for m, w in results.items()}
    if len(set(verdicts.values())) != 1:
        raise ValuativeDisagreement(f"methods disagree: {results}")
    return next(iter(verdicts.values()))


# ---------------------------------------------------------------------------
# monomial basis of the Chow ring and its Schubert realization


def H(n: int, F: int) -> Matroid:
    """The corank-1 matroid whose unique circuit is F."""
    E = full(n)
    if not F:
        raise MatroidError("H_F needs a nonempty F")
    return Matroid.from_bases(n, [E & ~(1 << i) for i in range(n) if F >> i & 1])


def _chains(n: int):
    E = full(n)

    def rec(prev, chain):
        yield chain
        for F in range(1, E + 1):
            if F & prev == prev and F != prev:
                yield from rec(F, chain + (F,))

    yield from rec(0, ())


def monomial_basis(n: int, degree: int | None = None) -> list[tuple[tuple[int, int], ...]]:
    """Exponent data ((F_1, d_1), ..., (F_k, d_k)) with d_1 <= |F_1| and
    d_i < |F_i \\ F_{i-1}| for i >= 2."""
    out = []
    for chain in _chains(n):
        ranges = []
        prev = 0
        for i, F in enumerate(chain):
            size = popcount(F & ~prev)
            top = size if i == 0 else size - 1
            ranges.append(range(1, top + 1))
            prev = F
        for ds in itertools.product(*ranges):
            if degree is None or sum(ds) == degree:
                out.append(tuple(zip(chain, ds)))
    return out


def monomial_to_matroid(n: int, mono: tuple[tuple[int, int], ...]) -> Matroid:
    M = Matroid(n, (full(n),))
    for F, d in mono:
        for _ in range(d):
            M = intersection(M, H(n, F))
    return M
