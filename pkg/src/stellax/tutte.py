"""Tutte polynomials, their 4-variable homogenization, the localization formulas for both,
and exact Lorentzian / log-concavity certification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import sympy

from .eqclasses import (
    ChowClass,
    alpha,
    chern,
    chern_Q,
    chern_S,
    integrate_formal,
    kclass_Q,
    segre,
    sum_of_O1,
    y,
)
from .matroid import Matroid, contract, delete, popcount
from .symbolic import MultiPoly


@dataclass(frozen=True)
class TuttePoly:
    poly: MultiPoly
    n: int
    r: int
    names: tuple[str, str] = ("x", "y")

    def __call__(self, a, b) -> Fraction:
        return self.poly.evaluate([a, b])

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.poly.coefficient((i, j))

    def __str__(self):
        return self.poly.to_str(self.names)


def tutte(M: Matroid) -> TuttePoly:
    """Corank-nullity sum over all subsets."""
    r = M.rank
    terms: dict[tuple[int, int], int] = {}
    for S in range(1 << M.n):
        k = M.rk(S)
        e = (r - k, popcount(S) - k)
        terms[e] = terms.get(e, 0) + 1
    # (x-1)^a (y-1)^b expanded
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in terms.items():
        for i in range(a + 1):
            for j in range(b + 1):
                v = c * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                out[(i, j)] = out.get((i, j), 0) + v
    return TuttePoly(MultiPoly(2, out), M.n, r)


def tutte_deletion_contraction(M: Matroid) -> MultiPoly:
    """Independent recursion: T = T_{M\\e} + T_{M/e}, x for a coloop, y for a loop."""
    if M.n == 0:
        return MultiPoly.const(2, 1)
    e = M.n
    bit = 1 << (e - 1)
    if bit & M.loops:
        return MultiPoly.var(2, 1) * tutte_deletion_contraction(delete(M, e))
    if bit & M.coloops:
        return MultiPoly.var(2, 0) * tutte_deletion_contraction(contract(M, e))
    return tutte_deletion_contraction(delete(M, e)) + tutte_deletion_contraction(contract(M, e))


def shift(T: TuttePoly, names=("u", "v")) -> TuttePoly:
    """T(u+1, v+1)."""
    img = [MultiPoly.linear([1, 0], 1), MultiPoly.linear([0, 1], 1)]
    return TuttePoly(T.poly.substitute(img), T.n, T.r, names)


def rank_generating(M: Matroid) -> MultiPoly:
    """sum_I z^{r - rk I} w^{|I| - rk I} u^I in variables (z, w, u_1..u_n)."""
    n, r = M.n, M.rank
    terms = {}
    for I in range(1 << n):
        k = M.rk(I)
        e = (r - k, popcount(I) - k) + tuple(I >> i & 1 for i in range(n))
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(n + 2, terms)


def sq_intersection(M: Matroid, I: int) -> MultiPoly:
    k = M.rk(I)
    return MultiPoly.monomial((M.rank - k, popcount(I) - k))


def _y_product(n: int, I: int) -> ChowClass:
    out = ChowClass.constant(n, 1)
    for i in range(1, n + 1):
        if I >> (i - 1) & 1:
            out = out * y(n, i)
    return out


def _sq_form(n: int, r: int, F: MultiPoly) -> MultiPoly:
    """From sum c X0^a X1^b X2^c to sum c z^a w^{n-r-b}."""
    out = {}
    for e, c in F.terms.items():
        key = (e[0], n - r - e[1])
        out[key] = out.get(key, 0) + c
    return MultiPoly(2, out)


def sq_intersection_via_localization(M: Matroid, I: int) -> MultiPoly:
    F = integrate_formal([chern_S(M), chern_Q(M), _y_product(M.n, I)])
    return _sq_form(M.n, M.rank, F)


def tutte_via_localization(M: Matroid) -> TuttePoly:
    """∫ c(S_M, u) v^{n-r} c(Q_M, 1/v) c(⊕ O(1)) as a polynomial in (u, v)."""
    F = integrate_formal([chern_S(M), chern_Q(M), chern(sum_of_O1(M.n))])
    return TuttePoly(_sq_form(M.n, M.rank, F), M.n, M.rank, ("u", "v"))


# ---------------------------------------------------------------------------
# homogenization


T4_NAMES = ("x", "y", "z", "w")


def t4(M: Matroid) -> MultiPoly:
    """(y+z)^r (x+w)^{n-r} T_M((x+y)/(y+z), (x+y+z+w)/(x+w))."""
    n, r = M.n, M.rank
    T = tutte(M).poly
    xy = MultiPoly.linear([1, 1, 0, 0])
    yz = MultiPoly.linear([0, 1, 1, 0])
    xyzw = MultiPoly.linear([1, 1, 1, 1])
    xw = MultiPoly.linear([1, 0, 0, 1])
    out = MultiPoly.zero(4)
    for (i, j), c in T.terms.items():
        if i > r or j > n - r:
            raise ArithmeticError(f"substitution is not polynomial: x^{i} y^{j} in T for rank {r}")
        out = out + xy ** i * yz ** (r - i) * xyzw ** j * xw ** (n - r - j) * c
    return out


def t4_via_localization(M: Matroid) -> MultiPoly:
    """∫ s(O(-1), x) c(⊕ O(1), y) s(Q^∨, z) c(Q, w)."""
    n = M.n
    a = alpha(n)
    s_taut = ChowClass.constant(n, 1)
    power = ChowClass.constant(n, 1)
    for _ in range(n):
        power = power * a
        s_taut = s_taut + power
    factors = [s_taut, chern(sum_of_O1(n)), segre(kclass_Q(M).dual()), chern_Q(M)]
    return integrate_formal(factors)


def contraction_lemma_sides(M: Matroid, a, b, c, d) -> tuple:
    """Both sides of sum_I a^|I| b^{r-rk I} c^{n-|I|-r+rk I} T_{M/I}(d/b, (b+c)/c)
    = (a+b)^r c^{n-r} T_M((a+d)/(a+b), (a+b+c)/c), for sympy expressions a..d."""
    n, r = M.n, M.rank
    X, Y = sympy.symbols("X Y")

    def T_expr(N: Matroid):
        return sum(int(cf) * X ** i * Y ** j for (i, j), cf in tutte(N).poly.terms.items())

    lhs = 0
    for I in range(1 << n):
        k = M.rk(I)
        N = _contract_set(M, I)
        lhs += (a ** popcount(I) * b ** (r - k) * c ** (n - popcount(I) - r + k)
                * T_expr(N).subs({X: d / b, Y: (b + c) / c}, simultaneous=True))
    rhs = (a + b) ** r * c ** (n - r) * T_expr(M).subs(
        {X: (a + d) / (a + b), Y: (a + b + c) / c}, simultaneous=True)
    return sympy.simplify(lhs), sympy.simplify(rhs)


def _contract_set(M: Matroid, I: int) -> Matroid:
    N = M
    for e in sorted((i + 1 for i in range(M.n) if I >> i & 1), reverse=True):
        N = contract(N, e)
    return N


# ---------------------------------------------------------------------------
# Lorentzian certification


@dataclass(frozen=True)
class LorentzianVerdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def normalization(f: MultiPoly) -> MultiPoly:
    return MultiPoly(f.nvars, {e: c / _multifact(e) for e, c in f.terms.items()})


def _multifact(e) -> int:
    out = 1
    for k in e:
        out *= factorial(k)
    return out


def is_m_convex(support) -> bool:
    supp = set(support)
    for a in supp:
        for b in supp:
            for i in range(len(a)):
                if a[i] <= b[i]:
                    continue
                ok = False
                for j in range(len(a)):
                    if a[j] < b[j]:
                        c = list(a)
                        c[i] -= 1
                        c[j] += 1
                        if tuple(c) in supp:
                            ok = True
                            break
                if not ok:
                    return False
    return True


def positive_eigenvalue_count(H: sympy.Matrix) -> int:
    """Exact count for a symmetric rational matrix: Descartes' rule on its characteristic
    polynomial is exact because all roots are real."""
    lam = sympy.Symbol("lam")
    coeffs = [c for c in H.charpoly(lam).all_coeffs() if c != 0]
    return sum(1 for p, q in zip(coeffs, coeffs[1:]) if (p > 0) != (q > 0))


def lorentzian_check(f: MultiPoly) -> LorentzianVerdict:
    """Denormalized Lorentzian: N(f) has nonnegative coefficients, M-convex support and
    every (d-2)-th partial derivative is a quadratic form with at most one positive eigenvalue."""
    if f.is_zero():
        return LorentzianVerdict(True, "zero polynomial")
    degs = {sum(e) for e in f.terms}
    if len(degs) != 1:
        raise ValueError("lorentzian_check needs a homogeneous polynomial")
    (d,) = degs
    if any(e_k < 0 for e in f.terms for e_k in e):
        raise ValueError("lorentzian_check needs a polynomial, not a Laurent polynomial")
    if any(c < 0 for c in f.terms.values()):
        return LorentzianVerdict(False, "negative coefficient")
    if not is_m_convex(f.terms):
        return LorentzianVerdict(False, "support is not M-convex")
    m = f.nvars
    if d < 2:
        return LorentzianVerdict(True, "degree below 2")
    coef = f.terms  # H_ij of the derivative of N(f) along x^a is the coefficient of x^{a+e_i+e_j} in f
    for a in _compositions(d - 2, m):
        H = sympy.zeros(m, m)
        for i in range(m):
            for j in range(m):
                e = list(a)
                e[i] += 1
                e[j] += 1
                c = coef.get(tuple(e), 0)
                H[i, j] = sympy.Rational(c.numerator, c.denominator) if c else 0
        if H.is_zero_matrix:
            continue
        k = positive_eigenvalue_count(H)
        if k > 1:
            return LorentzianVerdict(False, f"derivative along {a} has {k} positive eigenvalues")
    return LorentzianVerdict(True, "certified")


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def postnikov_shapiro(M: Matroid) -> list[int]:
    """Coefficients of q^r T_M(1/q, 1+q), constant term first."""
    r = M.rank
    acc: dict[int, int] = {}
    for (i, j), c in tutte(M).poly.terms.items():
        for k in range(j + 1):
            p = r - i + k
            acc[p] = acc.get(p, 0) + int(c) * comb(j, k)
    top = max(acc) if acc else 0
    return [acc.get(p, 0) for p in range(top + 1)]


def logconcave_check(seq) -> bool:
    """Log-concave with no internal zeros."""
    nz = [k for k, a in enumerate(seq) if a]
    if not nz:
        return True
    core = list(seq[nz[0]:nz[-1] + 1])
    if any(a <= 0 for a in core):
        return False
    return all(core[k] ** 2 >= core[k - 1] * core[k + 1] for k in range(1, len(core) - 1))
