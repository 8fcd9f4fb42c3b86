"""Equivariant K-theory and Chow classes of the stellahedral variety, by localization.

A class is stored by its restrictions to the torus-fixed points, i.e. one Laurent
polynomial in T_1..T_n (K-theory) or one polynomial / rational function in t_1..t_n
(Chow) per maximal cone.  Integrals and Euler characteristics are computed by
summing over fixed points along a generic line, with exact rational arithmetic.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .fan import (
    ConePair,
    Ray,
    augmented_bergman_fan,
    cone_order,
    cones,
    cones_containing,
    dual_basis,
    facets,
    generator,
    maximal_cones,
    star_coordinates,
    walls,
)
from .matroid import Matroid, full, lex_min_basis_contracted, popcount, uniform
from .polymatroid import Polymatroid, independence_polytope
from .symbolic import MultiPoly, UniRat, unirat_eval, unirat_sum

_SIGN: int | None = None
_SEED = 0


class LocalizationError(ArithmeticError):
    """A localization sum failed a consistency check (pole, disagreement, non-integrality)."""


class CalibrationError(RuntimeError):
    pass


def set_seed(seed: int) -> None:
    global _SEED
    _SEED = seed


def get_seed() -> int:
    return _SEED


# ---------------------------------------------------------------------------
# generic directions


@lru_cache(maxsize=None)
def directions(n: int, seed: int, count: int = 2) -> tuple[tuple[int, ...], ...]:
    """Integer vectors pairing to nonzero with every tangent weight of every fixed point."""
    rng = random.Random(f"stellax-{n}-{seed}")
    weights = {u for s in maximal_cones(n) for u in dual_basis(n, s).values()}
    out: list[tuple[int, ...]] = []
    hi = 2 * n + 1
    while len(out) < count:
        a = tuple(rng.randint(1, hi) for _ in range(n))
        if a in out:
            hi += 1
            continue
        if all(sum(x * y for x, y in zip(u, a)) for u in weights):
            out.append(a)
        else:
            hi += 1  # widen the range after a degenerate draw
    return tuple(out)


def _dot(u: Sequence[int], a: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, a))


@lru_cache(maxsize=None)
def _euler_values(n: int, a: tuple[int, ...], s: int) -> dict[ConePair, int]:
    """prod over rays of s * <u_rho, a>: the Euler class of the tangent space at a fixed point."""
    out = {}
    for sigma in maximal_cones(n):
        e = 1
        for u in dual_basis(n, sigma).values():
            e *= s * _dot(u, a)
        out[sigma] = e
    return out


# ---------------------------------------------------------------------------
# K-classes


def _kvars(n: int) -> list[str]:
    return [f"T{i}" for i in range(1, n + 1)]


def _cvars(n: int) -> list[str]:
    return [f"t{i}" for i in range(1, n + 1)]


class KClass:
    """Equivariant K-class: maximal cone -> Laurent polynomial in T_1..T_n."""

    def __init__(self, n: int, loc: dict[ConePair, MultiPoly]):
        self.n = n
        self.loc = loc

    @classmethod
    def constant(cls, n: int, c=1) -> "KClass":
        return cls(n, {s: MultiPoly.const(n, c) for s in maximal_cones(n)})

    def __getitem__(self, sigma: ConePair) -> MultiPoly:
        return self.loc[sigma]

    def _zip(self, other, op) -> "KClass":
        if isinstance(other, (int, Fraction)):
            other = KClass.constant(self.n, other)
        return KClass(self.n, {s: op(self.loc[s], other.loc[s]) for s in self.loc})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return KClass(self.n, {s: -p for s, p in self.loc.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KClass(self.n, {s: p * other for s, p in self.loc.items()})
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "KClass":
        return KClass(self.n, {s: p ** k for s, p in self.loc.items()})

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return self.n == other.n and self.loc == other.loc

    def dual(self) -> "KClass":
        inv = [MultiPoly.var(self.n, i, -1) for i in range(self.n)]
        return KClass(self.n, {s: p.substitute(inv) for s, p in self.loc.items()})

    def rank(self) -> int:
        vals = {p.evaluate([1] * self.n) for p in self.loc.values()}
        if len(vals) != 1:
            raise LocalizationError(f"rank varies between fixed points: {sorted(vals)}")
        (v,) = vals
        return int(v)

    def wall_failures(self) -> list:
        bad = []
        for w in walls(self.n):
            diff = self.loc[w.sigma] - self.loc[w.sigma2]
            if not diff.substitute(_k_wall_images(self.n, w.v)).is_zero():
                bad.append(w)
        return bad

    def is_valid(self) -> bool:
        return not self.wall_failures()

    def to_json(self) -> dict:
        names = _kvars(self.n)
        return {s.key(): p.to_str(names) for s, p in sorted(self.loc.items())}


@lru_cache(maxsize=None)
def _k_wall_images(n: int, v: tuple[int, ...]) -> tuple[MultiPoly, ...]:
    # quotient by 1 - T^v: solve for the last variable with nonzero exponent (it is ±1)
    j = max(i for i in range(n) if v[i])
    e = [-v[i] * v[j] for i in range(n)]
    e[j] = 0
    images = [MultiPoly.var(n, i) for i in range(n)]
    images[j] = MultiPoly.monomial(e)
    return tuple(images)


@lru_cache(maxsize=None)
def _chow_wall_images(n: int, v: tuple[int, ...]) -> tuple[MultiPoly, ...]:
    j = max(i for i in range(n) if v[i])
    coeffs = [-v[i] * v[j] for i in range(n)]
    coeffs[j] = 0
    images = [MultiPoly.var(n, i) for i in range(n)]
    images[j] = MultiPoly.linear(coeffs)
    return tuple(images)


def one(n: int) -> KClass:
    return KClass.constant(n, 1)


def _inv_var(n: int, i: int) -> MultiPoly:
    return MultiPoly.var(n, i, -1)


def _tautological(M: Matroid, quotient: bool) -> KClass:
    n = M.n
    E = full(n)
    rt = M.rank_table
    loc = {}
    for sigma in maximal_cones(n):
        I = sigma.I
        B = lex_min_basis_contracted(M, I, cone_order(n, sigma))
        if quotient:
            const = popcount(I) - rt[I]
            roots = E & ~I & ~B
        else:
            const = rt[I]
            roots = B
        p = MultiPoly.const(n, const)
        for i in range(n):
            if roots >> i & 1:
                p = p + _inv_var(n, i)
        loc[sigma] = p
    return KClass(n, loc)


def kclass_S(M: Matroid) -> KClass:
    return _tautological(M, quotient=False)


def kclass_Q(M: Matroid) -> KClass:
    return _tautological(M, quotient=True)


def sum_of_O1(n: int) -> KClass:
    """The direct sum of the pullbacks of O(1) from the n projective lines."""
    E = full(n)
    loc = {}
    for sigma in maximal_cones(n):
        p = MultiPoly.const(n, popcount(sigma.I))
        for i in range(n):
            if (E & ~sigma.I) >> i & 1:
                p = p + _inv_var(n, i)
        loc[sigma] = p
    return KClass(n, loc)


def polytope_vertex(P: Polymatroid, sigma: ConePair) -> tuple[int, ...]:
    """Vertex of P minimizing the functionals interior to sigma: zero on I, then greedy
    from the last element of the induced order backwards."""
    n = P.n
    x = [0] * n
    S = 0
    for e in reversed(cone_order(n, sigma)):
        bit = 1 << (e - 1)
        x[e - 1] = P.f[S | bit] - P.f[S]
        S |= bit
    return tuple(x)


def kclass_of_polytope(P: Polymatroid, translation: Sequence[int] | None = None) -> KClass:
    n = P.n
    t = tuple(translation) if translation is not None else (0,) * n
    loc = {}
    for sigma in maximal_cones(n):
        v = polytope_vertex(P, sigma)
        loc[sigma] = MultiPoly.monomial(tuple(-(a + b) for a, b in zip(v, t)))
    return KClass(n, loc)


def _roots(p: MultiPoly) -> list[tuple[tuple[int, ...], int]]:
    roots = []
    for e, c in sorted(p.terms.items()):
        if c < 0 or c.denominator != 1:
            raise LocalizationError(f"class does not have simple Chern roots: {p.to_str()}")
        roots.append((e, int(c)))
    return roots


def exterior_powers(xi: KClass) -> list[KClass]:
    """[∧^0 xi, ..., ∧^rk xi] from prod (1 + u T^m)^a at each fixed point."""
    n = xi.n
    rk = xi.rank()
    out = [dict() for _ in range(rk + 1)]
    for sigma, p in xi.loc.items():
        coeffs = [MultiPoly.const(n, 1)]
        for e, a in _roots(p):
            mono = MultiPoly.monomial(e)
            for _ in range(a):
                nxt = coeffs + [MultiPoly.zero(n)]
                for k in range(len(coeffs) - 1, -1, -1):
                    nxt[k + 1] = nxt[k + 1] + coeffs[k] * mono
                coeffs = nxt
        for k in range(rk + 1):
            out[k][sigma] = coeffs[k] if k < len(coeffs) else MultiPoly.zero(n)
    return [KClass(n, d) for d in out]


def sym_power(xi: KClass, k: int) -> KClass:
    """Sym^k xi: coefficient of u^k in prod (1 - u T^m)^(-a)."""
    n = xi.n
    loc = {}
    for sigma, p in xi.loc.items():
        coeffs = [MultiPoly.const(n, 1)] + [MultiPoly.zero(n)] * k
        for e, a in _roots(p):
            mono = MultiPoly.monomial(e)
            for _ in range(a):
                # multiply by 1/(1 - u m) = sum_j u^j m^j
                for d in range(1, k + 1):
                    coeffs[d] = coeffs[d] + coeffs[d - 1] * mono
        loc[sigma] = coeffs[k]
    return KClass(n, loc)


def structure_sheaf_class(M: Matroid) -> KClass:
    """Alternating sum of exterior powers of the dual of the augmented quotient class."""
    powers = exterior_powers(kclass_Q(M).dual())
    total = KClass.constant(M.n, 0)
    for i, w in enumerate(powers):
        total = total + (w if i % 2 == 0 else -w)
    return total


# ---------------------------------------------------------------------------
# Chow classes


class ChowClass:
    """Equivariant Chow class: maximal cone -> polynomial in t_1..t_n, or a quotient
    num/den with den(0) != 0 (the images of Laurent K-classes under zeta and phi)."""

    def __init__(self, n: int, num: dict[ConePair, MultiPoly],
                 den: dict[ConePair, MultiPoly] | None = None):
        self.n = n
        self.num = num
        if den is not None and all(d == 1 for d in den.values()):
            den = None
        self.den = den

    @classmethod
    def constant(cls, n: int, c=1) -> "ChowClass":
        return cls(n, {s: MultiPoly.const(n, c) for s in maximal_cones(n)})

    def is_polynomial(self) -> bool:
        return self.den is None

    def _den(self, s: ConePair) -> MultiPoly:
        return self.den[s] if self.den is not None else MultiPoly.const(self.n, 1)

    def __getitem__(self, sigma: ConePair) -> MultiPoly:
        if not self.is_polynomial():
            raise LocalizationError("rational class has no polynomial localization")
        return self.num[sigma]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass.constant(self.n, other)
        if self.is_polynomial() and other.is_polynomial():
            return ChowClass(self.n, {s: self.num[s] + other.num[s] for s in self.num})
        num = {s: self.num[s] * other._den(s) + other.num[s] * self._den(s) for s in self.num}
        den = {s: self._den(s) * other._den(s) for s in self.num}
        return ChowClass(self.n, num, den)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, {s: -p for s, p in self.num.items()}, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.n, {s: p * other for s, p in self.num.items()}, self.den)
        num = {s: self.num[s] * other.num[s] for s in self.num}
        if self.is_polynomial() and other.is_polynomial():
            return ChowClass(self.n, num)
        return ChowClass(self.n, num, {s: self._den(s) * other._den(s) for s in self.num})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        out = ChowClass.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return all(self.num[s] * other._den(s) == other.num[s] * self._den(s) for s in self.num)

    def component(self, k: int) -> "ChowClass":
        if not self.is_polynomial():
            raise LocalizationError("graded pieces of rational classes are only available by integration")
        return ChowClass(self.n, {s: p.homogeneous_component(k) for s, p in self.num.items()})

    def truncate(self, k: int) -> "ChowClass":
        if not self.is_polynomial():
            raise LocalizationError("cannot truncate a rational class")
        return ChowClass(self.n, {s: p.truncate(k) for s, p in self.num.items()})

    def wall_failures(self) -> list:
        bad = []
        for w in walls(self.n):
            a, b = w.sigma, w.sigma2
            diff = self.num[a] * self._den(b) - self.num[b] * self._den(a)
            if not diff.substitute(_chow_wall_images(self.n, w.v)).is_zero():
                bad.append(w)
        return bad

    def is_valid(self) -> bool:
        return not self.wall_failures()

    def to_json(self) -> dict:
        names = _cvars(self.n)
        out = {}
        for s in sorted(self.num):
            text = self.num[s].to_str(names)
            if self.den is not None:
                text = f"({text})/({self.den[s].to_str(names)})"
            out[s.key()] = text
        return out


def chern(xi: KClass, u: int = 1) -> ChowClass:
    """Total equivariant Chern class prod (1 + t_m)^a over the simple roots T^m."""
    n = xi.n
    num = {}
    for sigma, p in xi.loc.items():
        c = MultiPoly.const(n, 1)
        for e, a in _roots(p):
            if any(e):
                c = c * MultiPoly.linear(e, 1) ** a
        num[sigma] = c
    return ChowClass(n, num)


def segre(xi: KClass) -> ChowClass:
    """Inverse of the total Chern class, expanded up to degree n."""
    n = xi.n
    num = {}
    for sigma, p in xi.loc.items():
        s = MultiPoly.const(n, 1)
        for e, a in _roots(p):
            if not any(e):
                continue
            lin = MultiPoly.linear(e)
            series = MultiPoly.const(n, 0)
            term = MultiPoly.const(n, 1)
            for _ in range(n + 1):
                series = series + term
                term = (term * -lin)
            for _ in range(a):
                s = (s * series).truncate(n)
        num[sigma] = s
    return ChowClass(n, num)


def chern_S(M: Matroid) -> ChowClass:
    return chern(kclass_S(M))


def chern_Q(M: Matroid) -> ChowClass:
    return chern(kclass_Q(M))


def segre_S(M: Matroid) -> ChowClass:
    return segre(kclass_S(M))


def segre_Q(M: Matroid) -> ChowClass:
    return segre(kclass_Q(M))


def zeta(xi: KClass) -> ChowClass:
    """T_i -> 1 + t_i."""
    n = xi.n
    num, den = {}, {}
    for sigma, p in xi.loc.items():
        shift = [max(0, -min((e[i] for e in p.terms), default=0)) for i in range(n)]
        q = p * MultiPoly.monomial(shift)
        images = [MultiPoly.linear([int(j == i) for j in range(n)], 1) for i in range(n)]
        num[sigma] = q.substitute(images)
        d = MultiPoly.const(n, 1)
        for i in range(n):
            d = d * images[i] ** shift[i]
        den[sigma] = d
    return ChowClass(n, num, den)


def phi(xi: KClass) -> ChowClass:
    """D_A ∘ zeta ∘ D_K, i.e. T_i^{-1} -> 1 - t_i."""
    n = xi.n
    num, den = {}, {}
    for sigma, p in xi.loc.items():
        shift = [max(0, max((e[i] for e in p.terms), default=0)) for i in range(n)]
        q = p * MultiPoly.monomial([-x for x in shift])
        r = MultiPoly(n, {tuple(-x for x in e): c for e, c in q.terms.items()})
        images = [MultiPoly.linear([-int(j == i) for j in range(n)], 1) for i in range(n)]
        num[sigma] = r.substitute(images)
        d = MultiPoly.const(n, 1)
        for i in range(n):
            d = d * images[i] ** shift[i]
        den[sigma] = d
    return ChowClass(n, num, den)


def D_A(xi: ChowClass) -> ChowClass:
    """t -> -t, i.e. (-1)^k on degree k."""
    neg = [-1] * xi.n
    num = {s: p.scale_variables(neg) for s, p in xi.num.items()}
    den = None if xi.den is None else {s: p.scale_variables(neg) for s, p in xi.den.items()}
    return ChowClass(xi.n, num, den)


# -- divisors, orbits, alpha, y ---------------------------------------------


def chow_divisor(n: int, ray: Ray, sign: int | None = None) -> ChowClass:
    s = calibrated_sign() if sign is None else sign
    num = {}
    for sigma in maximal_cones(n):
        ub = dual_basis(n, sigma)
        if ray in ub:
            num[sigma] = MultiPoly.linear([s * x for x in ub[ray]])
        else:
            num[sigma] = MultiPoly.zero(n)
    return ChowClass(n, num)


def chow_orbit(n: int, tau: ConePair, sign: int | None = None) -> ChowClass:
    out = ChowClass.constant(n, 1)
    for r in tau.rays():
        out = out * chow_divisor(n, r, sign)
    return out


def alpha(n: int) -> ChowClass:
    return phi(kclass_of_polytope(independence_polytope(uniform(1, n)))).component(1)


def y(n: int, i: int) -> ChowClass:
    seg = [0] * (1 << n)
    for S in range(1 << n):
        seg[S] = 1 if S >> (i - 1) & 1 else 0
    return phi(kclass_of_polytope(Polymatroid(n, tuple(seg)))).component(1)


def divisor_of_polytope(P: Polymatroid, sign: int | None = None) -> ChowClass:
    """sum over S ⊊ E of f(E \\ S) [D_S]."""
    n = P.n
    E = full(n)
    out = ChowClass.constant(n, 0)
    for S in range(E):
        c = P.f[E & ~S]
        if c:
            out = out + chow_divisor(n, ("S", S), sign) * c
    return out


# ---------------------------------------------------------------------------
# integration


def _integrate_once(xi: ChowClass, a: tuple[int, ...], s: int) -> Fraction:
    n = xi.n
    euler = _euler_values(n, a, s)
    if xi.is_polynomial():
        totals: dict[int, Fraction] = defaultdict(Fraction)
        for sigma, p in xi.num.items():
            e = euler[sigma]
            for d, v in p.graded_values(a).items():
                totals[d] += v / e
        for d, v in totals.items():
            if d < n and v != 0:
                raise LocalizationError(f"localization sum has a pole of order {n - d}")
        return totals.get(n, Fraction(0))
    terms = []
    for sigma in xi.num:
        nv = xi.num[sigma].graded_values(a)
        dv = xi._den(sigma).graded_values(a)
        N = [nv.get(k, 0) for k in range(max(nv, default=0) + 1)]
        D = [0] * n + [dv.get(k, 0) * euler[sigma] for k in range(max(dv, default=0) + 1)]
        terms.append(UniRat(N, D))
    total = unirat_sum(terms)
    if not total.regular_at(0):
        raise LocalizationError("localization sum is not regular at the origin")
    return unirat_eval(total, 0)


def integrate(xi: ChowClass, sign: int | None = None, seed: int | None = None) -> Fraction:
    """Degree of the top-dimensional part, via two independent generic directions."""
    s = calibrated_sign() if sign is None else sign
    dirs = directions(xi.n, _SEED if seed is None else seed)
    vals = {_integrate_once(xi, a, s) for a in dirs}
    if len(vals) != 1:
        raise LocalizationError(f"directions disagree: {sorted(vals)}")
    return vals.pop()


def integrate_formal(factors: Sequence[ChowClass], sign: int | None = None,
                     seed: int | None = None) -> MultiPoly:
    """∫ prod_j (sum_k c_k(factor_j) X_j^k) as a polynomial in the formal X_j."""
    n = factors[0].n
    m = len(factors)
    s = calibrated_sign() if sign is None else sign
    results = []
    for a in directions(n, _SEED if seed is None else seed):
        euler = _euler_values(n, a, s)
        totals: dict[tuple, Fraction] = defaultdict(Fraction)
        for sigma in maximal_cones(n):
            cur = {(0,) * m: Fraction(1)}
            for j, f in enumerate(factors):
                gv = f[sigma].graded_values(a)
                nxt: dict[tuple, Fraction] = defaultdict(Fraction)
                for e, c in cur.items():
                    for k, v in gv.items():
                        if sum(e) + k > n:
                            continue
                        ee = list(e)
                        ee[j] += k
                        nxt[tuple(ee)] += c * v
                cur = nxt
            e_sigma = euler[sigma]
            for e, c in cur.items():
                totals[e] += c / e_sigma
        for e, v in totals.items():
            if sum(e) < n and v != 0:
                raise LocalizationError("formal localization sum has a pole")
        results.append(MultiPoly(m, {e: v for e, v in totals.items() if sum(e) == n}))
    if any(r != results[0] for r in results):
        raise LocalizationError("directions disagree")
    return results[0]


def _chi_once(xi: KClass, a: tuple[int, ...], s: int) -> Fraction:
    n = xi.n
    terms = []
    for sigma, p in xi.loc.items():
        if p.is_zero():
            continue
        ks = [s * _dot(u, a) for u in dual_basis(n, sigma).values()]
        # 1/(1 - z^{-k}) = z^k/(z^k - 1) for k > 0 and 1/(1 - z^{|k|}) for k < 0
        shift = sum(k for k in ks if k > 0)
        exps = {}
        for e, c in p.terms.items():
            d = _dot(e, a) + shift
            exps[d] = exps.get(d, 0) + c
        low = min(exps)
        num = [Fraction(0)] * (max(exps) - min(low, 0) + 1)
        for d, c in exps.items():
            num[d - min(low, 0)] += c
        den = [Fraction(0)] * (-min(low, 0)) + [Fraction(1)]
        for k in ks:
            f = [Fraction(0)] * (abs(k) + 1)
            if k > 0:
                f[0], f[k] = Fraction(-1), Fraction(1)
            else:
                f[0], f[-k] = Fraction(1), Fraction(-1)
            den = _umul(den, f)
        terms.append(UniRat(num, den))
    total = unirat_sum(terms)
    return unirat_eval(total, 1)


def _umul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def euler_char(xi: KClass, sign: int | None = None, seed: int | None = None) -> int:
    s = calibrated_sign() if sign is None else sign
    vals = {_chi_once(xi, a, s) for a in directions(xi.n, _SEED if seed is None else seed)}
    if len(vals) != 1:
        raise LocalizationError(f"directions disagree: {sorted(vals)}")
    v = vals.pop()
    if v.denominator != 1:
        raise LocalizationError(f"non-integral Euler characteristic {v}")
    return int(v)


# ---------------------------------------------------------------------------
# Minkowski weights


@dataclass
class MinkowskiWeight:
    n: int
    d: int
    weights: dict[ConePair, int] = field(default_factory=dict)

    def __post_init__(self):
        self.weights = {c: w for c, w in self.weights.items() if w}

    def __add__(self, other: "MinkowskiWeight") -> "MinkowskiWeight":
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError("weights of different dimensions")
        acc = dict(self.weights)
        for c, w in other.weights.items():
            acc[c] = acc.get(c, 0) + w
        return MinkowskiWeight(self.n, self.d, acc)

    def __rmul__(self, k: int) -> "MinkowskiWeight":
        return MinkowskiWeight(self.n, self.d, {c: k * w for c, w in self.weights.items()})

    def __eq__(self, other):
        if not isinstance(other, MinkowskiWeight):
            return NotImplemented
        return (self.n, self.d, self.weights) == (other.n, other.d, other.weights)

    def is_zero(self) -> bool:
        return not self.weights

    def to_json(self) -> dict:
        return {c.key(): w for c, w in sorted(self.weights.items())}


def minkowski_weight(xi: ChowClass, d: int, sign: int | None = None,
                     seed: int | None = None) -> MinkowskiWeight:
    """tau -> ∫ xi_(n-d) · [Z_tau] over the d-dimensional cones."""
    n = xi.n
    if d < 0:
        return MinkowskiWeight(n, d)
    s = calibrated_sign() if sign is None else sign
    comp = xi.component(n - d)
    results = []
    for a in directions(n, _SEED if seed is None else seed):
        vals = {sig: p.evaluate(a) for sig, p in comp.num.items()}
        out = {}
        for tau in cones(n, d):
            rs = tau.ray_set()
            total = Fraction(0)
            for sig in cones_containing(n, tau):
                v = vals[sig]
                if not v:
                    continue
                denom = 1
                for r, u in dual_basis(n, sig).items():
                    if r not in rs:
                        denom *= s * _dot(u, a)
                total += v / denom
            if total.denominator != 1:
                raise LocalizationError(f"non-integral weight {total} on {tau}")
            out[tau] = int(total)
        results.append(MinkowskiWeight(n, d, out))
    if any(r != results[0] for r in results):
        raise LocalizationError("directions disagree")
    return results[0]


def is_balanced(w: MinkowskiWeight) -> bool:
    n = w.n
    acc: dict[ConePair, list[int]] = {}
    for tau, c in w.weights.items():
        for r, face in facets(tau):
            vec = acc.setdefault(face, [0] * n)
            for k, g in enumerate(generator(n, r)):
                vec[k] += c * g
    for face, vec in acc.items():
        sigma = cones_containing(n, face)[0]
        rs = face.ray_set()
        for r, u in dual_basis(n, sigma).items():
            if r not in rs and _dot(u, vec):
                return False
    return True


def bergman_weight(M: Matroid) -> MinkowskiWeight:
    """The constant weight 1 on the top-dimensional cones of the augmented Bergman fan."""
    return MinkowskiWeight(M.n, M.rank, {c: 1 for c in augmented_bergman_fan(M, M.rank)})


# ---------------------------------------------------------------------------
# restrictions


def restrict_to_perm(xi: KClass | ChowClass) -> dict[tuple[int, ...], MultiPoly]:
    """Localizations at the fixed points of the divisor of rho_empty, keyed by the maximal
    chain (i.e. the total order on E) of the permutohedral fan."""
    loc = xi.loc if isinstance(xi, KClass) else xi.num
    return {cone_order(xi.n, s): p for s, p in loc.items() if s.I == 0}


def restrict_to_stratum(xi: KClass | ChowClass, tau: ConePair) -> dict[tuple, MultiPoly]:
    loc = xi.loc if isinstance(xi, KClass) else xi.num
    return {star_coordinates(xi.n, tau, s): loc[s] for s in cones_containing(xi.n, tau)}


# ---------------------------------------------------------------------------
# calibration


def calibration_anchors(n: int, sign: int) -> dict[str, Fraction]:
    point = chow_orbit(n, maximal_cones(n)[0], sign)
    yprod = ChowClass.constant(n, 1)
    for i in range(1, n + 1):
        yprod = yprod * y(n, i)
    return {
        "point": integrate(point, sign),
        "alpha^n": integrate(alpha(n) ** n, sign),
        "y_1...y_n": integrate(yprod, sign),
        "chi(O)": Fraction(euler_char(one(n), sign)),
    }


def calibrate(ns: Iterable[int] = (1, 2, 3)) -> int:
    """Fix the global sign of the tangent weights from the anchor integrals."""
    global _SIGN
    ns = tuple(ns)
    good = [s for s in (1, -1)
            if all(v == 1 for n in ns for v in calibration_anchors(n, s).values())]
    if len(good) != 1:
        raise CalibrationError(f"anchors satisfied by signs {good}; expected exactly one")
    _SIGN = good[0]
    return _SIGN


def calibrated_sign() -> int:
    if _SIGN is None:
        calibrate()
    return _SIGN


# ---------------------------------------------------------------------------
# intersection of augmented Bergman classes


def intersection_weight(M: Matroid, N: Matroid) -> MinkowskiWeight | None:
    """Minkowski weight of c_crk(Q_M) c_crk'(Q_N); None when the degrees exceed n."""
    n = M.n
    a, b = n - M.rank, n - N.rank
    if a + b > n:
        return None
    cls = chern_Q(M).component(a) * chern_Q(N).component(b)
    return minkowski_weight(cls, n - a - b)


def predicted_intersection(M: Matroid, N: Matroid) -> MinkowskiWeight | None:
    """[Sigma_{M ∧ N}] if coranks add, else zero; None when the degrees exceed n."""
    from .matroid import intersection

    n = M.n
    a, b = n - M.rank, n - N.rank
    if a + b > n:
        return None
    P = intersection(M, N)
    if n - P.rank == a + b:
        return bergman_weight(P)
    return MinkowskiWeight(n, n - a - b)


# ---------------------------------------------------------------------------
# lattice-point identity


def lattice_sum_identity(P: Polymatroid) -> KClass:
    """sum_k (-1)^k sum_{|S|=k} [O(D_{kP - p_S})] over subsets S of the lattice points of P;
    this vanishes in equivariant K-theory."""
    from itertools import combinations

    from .polymatroid import lattice_points

    n = P.n
    pts = lattice_points(P)
    total = KClass.constant(n, 0)
    for k in range(len(pts) + 1):
        kP = Polymatroid(n, tuple(k * v for v in P.f))
        for S in combinations(pts, k):
            shift = tuple(-sum(p[i] for p in S) for i in range(n))
            cls = kclass_of_polytope(kP, shift)
            total = total + (cls if k % 2 == 0 else -cls)
    return total
