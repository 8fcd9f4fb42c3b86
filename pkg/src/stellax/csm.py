"""A combinatorial model of the homology of matroid Schubert varieties (free on flats),
CSM classes of the open cell and the whole variety, and the pushforward to (P^1)^n."""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .eqclasses import chern_Q, chern_S, integrate, y
from .matroid import Matroid, elements, flats, independent_sets, popcount

# every matroid on at most this many elements is realizable over the complex numbers;
# the first exception (the Fano plane) has 7 elements
REALIZABLE_MAX_N = 6


def provenance(M: Matroid) -> str:
    return "formula" if M.n <= REALIZABLE_MAX_N else "formula-extrapolated"


@dataclass
class SchubertHomology:
    """Integer vector over the flats of M; y_F sits in degree rk(F)."""

    matroid: Matroid
    coeffs: dict[int, int] = field(default_factory=dict)

    def degree_of(self, F: int) -> int:
        return self.matroid.rk(F)

    def graded(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for F, c in self.coeffs.items():
            out.setdefault(self.degree_of(F), {})[F] = c
        return out

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "matroid": self.matroid.to_json(),
            "provenance": provenance(self.matroid),
            "classes": [{"flat": elements(F), "degree": self.degree_of(F), "coef": c}
                        for F, c in sorted(self.coeffs.items(), key=lambda t: (popcount(t[0]), t[0]))],
        }


def csm_open_cell(M: Matroid) -> SchubertHomology:
    return SchubertHomology(M, {F: 1 for F in flats(M)})


def csm_schubert_variety(M: Matroid) -> SchubertHomology:
    fl = flats(M)
    return SchubertHomology(M, {F: sum(1 for G in fl if G & F == F) for F in fl})


def bases_of_restriction(M: Matroid, F: int) -> list[int]:
    k = M.rk(F)
    return [I for I in independent_sets(M) if I & ~F == 0 and popcount(I) == k]


def pushforward_to_cube(M: Matroid, cls: SchubertHomology) -> dict[int, int]:
    """y_F -> sum of y_I over the bases I of M|F, in the boolean homology of (P^1)^n."""
    out: dict[int, int] = {}
    for F, c in cls.coeffs.items():
        for I in bases_of_restriction(M, F):
            out[I] = out.get(I, 0) + c
    return {I: c for I, c in out.items() if c}


def independent_sets_class(M: Matroid) -> dict[int, int]:
    return {I: 1 for I in independent_sets(M)}


def pushforward_matrix_rank(M: Matroid) -> int:
    fl = flats(M)
    cols = sorted({I for F in fl for I in bases_of_restriction(M, F)})
    rows = []
    for F in fl:
        bs = set(bases_of_restriction(M, F))
        rows.append([1 if I in bs else 0 for I in cols])
    return sympy.Matrix(rows).rank()


def csm_localization_values(M: Matroid) -> dict[int, int]:
    """I -> ∫ c(S_M) c_{n-r}(Q_M) prod_{i in I} y_i."""
    n = M.n
    base = chern_S(M) * chern_Q(M).component(n - M.rank)
    ys = [y(n, i) for i in range(1, n + 1)]
    out = {}
    for I in range(1 << n):
        cls = base
        for i in elements(I):
            cls = cls * ys[i - 1]
        out[I] = int(integrate(cls))
    return out


def verify_csm_localization(M: Matroid) -> tuple[bool, list[int]]:
    """Checks the integral equals 1 exactly on independent sets; returns (ok, bad subsets)."""
    vals = csm_localization_values(M)
    bad = [I for I, v in vals.items() if v != int(M.is_independent(I))]
    return not bad, bad
