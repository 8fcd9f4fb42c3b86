"""Polymatroids given by their (integer) submodular function, and an exact indicator-function oracle."""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .matroid import Matroid, full, popcount, to_mask, elements

# lcm of |det| over nonsingular k×k 0/1 matrices, k = 0..5
_DET_LCM = {0: 1, 1: 1, 2: 1, 3: 2, 4: 6, 5: 60}
MAX_FACE_CANDIDATES = 3_000_000


class PolymatroidError(ValueError):
    pass


class EmptySliceError(PolymatroidError):
    """The unit cube at the requested corner misses the polytope."""


@dataclass(frozen=True)
class Polymatroid:
    n: int
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != 1 << self.n:
            raise PolymatroidError("f must have one value per subset")
        if self.f[0] != 0:
            raise PolymatroidError("f(empty set) must be 0")
        for S in range(1 << self.n):
            for i in range(self.n):
                bit = 1 << i
                if S & bit:
                    continue
                if self.f[S | bit] < self.f[S]:
                    raise PolymatroidError("f is not non-decreasing")
                for j in range(i + 1, self.n):
                    bj = 1 << j
                    if S & bj:
                        continue
                    if self.f[S | bit] + self.f[S | bj] < self.f[S | bit | bj] + self.f[S]:
                        raise PolymatroidError("f is not submodular")

    def value(self, S) -> int:
        return self.f[to_mask(S)]

    def to_json(self) -> dict:
        return {"n": self.n,
                "f": {str(elements(S)): v for S, v in enumerate(self.f) if S}}

    @classmethod
    def from_json(cls, obj: dict) -> "Polymatroid":
        n = int(obj["n"])
        f = [0] * (1 << n)
        for key, v in obj["f"].items():
            S = to_mask(int(x) for x in key.strip("[] ").split(",") if x.strip())
            f[S] = int(v)
        return cls(n, tuple(f))


def independence_polytope(M: Matroid) -> Polymatroid:
    return Polymatroid(M.n, M.rank_table)


def base_polytope_vertices(M: Matroid) -> list[tuple[int, ...]]:
    return [tuple((B >> i) & 1 for i in range(M.n)) for B in M.bases]


def minkowski_sum(P: Polymatroid, Q: Polymatroid) -> Polymatroid:
    if P.n != Q.n:
        raise PolymatroidError("ambient dimensions differ")
    return Polymatroid(P.n, tuple(a + b for a, b in zip(P.f, Q.f)))


def stellahedron(n: int) -> Polymatroid:
    return Polymatroid(n, tuple(sum(min(popcount(S), r) for r in range(n + 1))
                                for S in range(1 << n)))


def point(n: int) -> Polymatroid:
    return Polymatroid(n, (0,) * (1 << n))


def greedy_vertex(P: Polymatroid, order: Sequence[int]) -> tuple[int, ...]:
    """Vertex maximizing a weight that decreases along ``order``; unlisted coordinates are 0."""
    x = [0] * P.n
    S = 0
    for e in order:
        bit = 1 << (e - 1)
        x[e - 1] = P.f[S | bit] - P.f[S]
        S |= bit
    return tuple(x)


def vertices(P: Polymatroid) -> list[tuple[int, ...]]:
    out = set()
    for perm in itertools.permutations(range(1, P.n + 1)):
        for k in range(P.n + 1):
            out.add(greedy_vertex(P, perm[:k]))
    return sorted(out)


def membership(x: Sequence, P: Polymatroid) -> bool:
    x = [Fraction(v) for v in x]
    if any(v < 0 for v in x):
        return False
    for S in range(1, 1 << P.n):
        if sum(x[i] for i in range(P.n) if S >> i & 1) > P.f[S]:
            return False
    return True


def lattice_points(P: Polymatroid) -> list[tuple[int, ...]]:
    box = [range(P.f[1 << i] + 1) for i in range(P.n)]
    return [p for p in itertools.product(*box) if membership(p, P)]


def cube_slice(P: Polymatroid, u: Sequence[int]) -> tuple[Matroid, tuple[int, ...]]:
    """P ∩ (u + [0,1]^E) written as u + I(N)."""
    u = tuple(int(v) for v in u)
    if any(v < 0 for v in u) or not membership(u, P):
        raise EmptySliceError(f"the cube at {u} does not meet the polytope")
    n = P.n
    E = full(n)
    uS = [sum(u[i] for i in range(n) if S >> i & 1) for S in range(1 << n)]
    h = [P.f[S] - uS[S] for S in range(1 << n)]
    # monotone hull: min over supersets
    hull = list(h)
    for S in range(E, -1, -1):
        for i in range(n):
            if not S >> i & 1:
                hull[S] = min(hull[S], hull[S | 1 << i])
    g = []
    for S in range(1 << n):
        best = popcount(S)
        T = S
        while True:
            best = min(best, hull[T] + popcount(S & ~T))
            if T == 0:
                break
            T = (T - 1) & S
        g.append(best)
    r = g[E]
    bases = [B for B in range(1 << n) if popcount(B) == r and g[B] == r]
    N = Matroid(n, tuple(sorted(bases)))
    if N.rank_table != tuple(g):
        raise PolymatroidError("cube slice is not an independence polytope")
    return N, u


# -- indicator combinations -------------------------------------------------


@dataclass(frozen=True)
class IndicatorTerm:
    coef: int
    poly: Polymatroid
    translation: tuple[int, ...]
    base: bool = False  # restrict to the face sum(x) = f(E) (a base polytope)

    def contains(self, x: Sequence) -> bool:
        y = [Fraction(a) - b for a, b in zip(x, self.translation)]
        if not membership(y, self.poly):
            return False
        return not self.base or sum(y) == self.poly.f[-1]


@dataclass
class IndicatorCombo:
    n: int
    terms: list[IndicatorTerm] = field(default_factory=list)

    def add(self, coef: int, poly: Polymatroid, translation=None, base: bool = False):
        if poly.n != self.n:
            raise PolymatroidError("all polytopes in a combination share n")
        t = tuple(translation) if translation is not None else (0,) * self.n
        self.terms.append(IndicatorTerm(coef, poly, t, base))
        return self

    @classmethod
    def of_matroids(cls, pairs) -> "IndicatorCombo":
        pairs = list(pairs)
        combo = cls(pairs[0][1].n)
        for c, M in pairs:
            combo.add(c, independence_polytope(M), base=True)
        return combo

    def __sub__(self, other: "IndicatorCombo") -> "IndicatorCombo":
        out = IndicatorCombo(self.n, list(self.terms))
        for t in other.terms:
            out.terms.append(IndicatorTerm(-t.coef, t.poly, t.translation, t.base))
        return out

    def simplified(self) -> "IndicatorCombo":
        acc: dict = {}
        for t in self.terms:
            key = (t.poly, t.translation, t.base)
            acc[key] = acc.get(key, 0) + t.coef
        return IndicatorCombo(self.n, [IndicatorTerm(c, *k) for k, c in acc.items() if c])

    def value(self, x: Sequence) -> int:
        return sum(t.coef for t in self.terms if t.contains(x))


@dataclass(frozen=True)
class IndicatorVerdict:
    zero: bool
    complete: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.zero


def _all_subset_rows(n: int) -> np.ndarray:
    return np.array([[(S >> i) & 1 for i in range(n)] for S in range(1, 1 << n)], dtype=np.int64)


def _grid_plan(n: int, lo, hi, total):
    """Per-coordinate denominators so that every face of the arrangement
    {<e_S, x> = k} inside the box gets a grid point in its relative interior."""
    free = n if total is None else n - 1
    denoms = []
    q = 1
    for j in range(free):
        size = n - j  # size of the linear systems defining vertices at this level
        q = 2 * q * _DET_LCM[size]
        denoms.append(q)
    scale = denoms[-1] if denoms else 1
    counts = [(hi[j] - lo[j]) * denoms[j] + 1 for j in range(free)]
    return free, denoms, scale, counts


@lru_cache(maxsize=64)
def face_points(n: int, lo: tuple, hi: tuple, total: int | None):
    """One relative-interior point (scaled integers, common denominator) per face
    of the arrangement {<e_S,x> = k : S nonempty, k integer} meeting the box,
    optionally restricted to the hyperplane sum(x) = total."""
    if n > 5:
        raise PolymatroidError("face enumeration guard: n <= 5")
    free, denoms, scale, counts = _grid_plan(n, lo, hi, total)
    if int(np.prod(counts)) > MAX_FACE_CANDIDATES:
        raise PolymatroidError("face enumeration guard: too many candidate points")
    axes = [np.arange(lo[j] * denoms[j], hi[j] * denoms[j] + 1, dtype=np.int64) * (scale // denoms[j])
            for j in range(free)]
    if free:
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, free)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    if total is not None:
        last = total * scale - grid.sum(axis=1)
        keep = (last >= lo[-1] * scale) & (last <= hi[-1] * scale)
        grid = np.concatenate([grid[keep], last[keep][:, None]], axis=1)
    A = _all_subset_rows(n)
    V = grid @ A.T
    code = 2 * np.floor_divide(V, scale) + (np.mod(V, scale) != 0)
    _, idx = np.unique(code, axis=0, return_index=True)
    return grid[np.sort(idx)], scale


def _term_mask(term: IndicatorTerm, X: np.ndarray, scale: int, A: np.ndarray) -> np.ndarray:
    Y = X - scale * np.array(term.translation, dtype=np.int64)
    ok = (Y >= 0).all(axis=1)
    f = np.array(term.poly.f[1:], dtype=np.int64) * scale
    ok &= ((Y @ A.T) <= f).all(axis=1)
    if term.base:
        ok &= Y.sum(axis=1) == term.poly.f[-1] * scale
    return ok


def _bounds(combo: IndicatorCombo):
    lo = [min(t.translation[i] for t in combo.terms) for i in range(combo.n)]
    hi = [max(t.translation[i] + t.poly.f[1 << i] for t in combo.terms) for i in range(combo.n)]
    return tuple(lo), tuple(hi)


def indicator_check(combo: IndicatorCombo, samples: int = 20000, seed: int = 0) -> IndicatorVerdict:
    combo = combo.simplified()
    if not combo.terms:
        return IndicatorVerdict(True, True)
    n = combo.n
    # base-polytope terms live on hyperplanes sum(x) = const; split by that constant
    groups: dict = {}
    for t in combo.terms:
        key = (t.poly.f[-1] + sum(t.translation)) if t.base else None
        groups.setdefault(key, []).append(t)
    if None in groups and len(groups) > 1:
        groups = {None: combo.terms}
    A = _all_subset_rows(n)
    complete = True
    for total, terms in groups.items():
        sub = IndicatorCombo(n, terms)
        lo, hi = _bounds(sub)
        try:
            X, scale = face_points(n, lo, hi, total)
        except PolymatroidError:
            complete = False
            X, scale = _sample_points(n, lo, hi, total, samples, seed)
        vals = np.zeros(len(X), dtype=np.int64)
        for t in terms:
            vals += t.coef * _term_mask(t, X, scale, A)
        bad = np.nonzero(vals)[0]
        if len(bad):
            w = tuple(Fraction(int(v), scale) for v in X[bad[0]])
            return IndicatorVerdict(False, complete, w)
    return IndicatorVerdict(True, complete)


def _sample_points(n, lo, hi, total, samples, seed):
    free, denoms, scale, counts = _grid_plan(n, lo, hi, total)
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        p = [rng.randint(lo[j] * denoms[j], hi[j] * denoms[j]) * (scale // denoms[j])
             for j in range(free)]
        if total is not None:
            p.append(total * scale - sum(p))
        rows.append(p)
    return np.array(rows, dtype=np.int64), scale


def indicator_is_zero(combo: IndicatorCombo) -> bool:
    v = indicator_check(combo)
    if not v.complete:
        warnings.warn("indicator oracle fell back to sampling: result is incomplete", stacklevel=2)
    return v.zero


def tile_into_independence_polytopes(P: Polymatroid) -> IndicatorCombo:
    """Write 1_P as a signed sum of translated independence polytopes.

    Each point of R^n is counted once by sum over faces G of the unit-cube tiling of
    (-1)^(n - dim G) 1_G, so 1_P = sum_G (-1)^(n - dim G) 1_{P ∩ G}; each P ∩ G is a
    translate of an independence polytope with the fixed coordinates as loops.
    """
    n = P.n
    acc: dict = {}
    slices: dict = {}
    # faces are w + [0,1]^A x {0} with lower corner w; corners with a -1 coordinate
    # still meet P when that coordinate is free (the face then touches x_i = 0)
    box = [range(-1, P.f[1 << i] + 1) for i in range(n)]
    for w in itertools.product(*box):
        neg = sum(1 << i for i in range(n) if w[i] < 0)
        wc = tuple(max(x, 0) for x in w)
        if wc not in slices:
            try:
                slices[wc] = cube_slice(P, wc)[0]
            except EmptySliceError:
                slices[wc] = None
        N = slices[wc]
        if N is None:
            continue
        for A in range(1 << n):
            if neg & ~A:
                continue
            free = A & ~neg
            bases = {B & free for B in N.bases}
            k = max(popcount(b) for b in bases)
            face = Matroid(n, tuple(sorted(b for b in bases if popcount(b) == k)))
            sign = -1 if (n - popcount(A)) % 2 else 1
            key = (face.rank_table, wc)
            acc[key] = acc.get(key, 0) + sign
    combo = IndicatorCombo(n)
    for (rt, w), c in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if c:
            combo.add(c, Polymatroid(n, rt), w)
    return combo
