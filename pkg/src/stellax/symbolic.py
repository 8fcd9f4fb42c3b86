"""Exact arithmetic: sparse (Laurent) polynomials over Q and univariate rational functions.

Everything here uses :class:`fractions.Fraction`; there is no floating point.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exp = tuple[int, ...]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables; exponents may be negative (Laurent)."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, object] | None = None):
        self.nvars = nvars
        clean: dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong arity (expected {nvars})")
                c = _frac(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MultiPoly":
        """The variable with 0-based index ``i`` raised to ``power``."""
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def linear(cls, coeffs: Sequence[int | Fraction], const=0) -> "MultiPoly":
        """The affine form ``const + sum coeffs[i] * x_i``."""
        n = len(coeffs)
        terms: dict[Exp, object] = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_laurent(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, Fraction] = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _frac(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return MultiPoly(self.nvars, {tuple(x * k for x in e): Fraction(1) / c ** -k})
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------
    def homogeneous_component(self, k: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def truncate(self, k: int) -> "MultiPoly":
        """Drop every term of total degree above ``k``."""
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= k})

    def components(self) -> dict[int, "MultiPoly"]:
        parts: dict[int, dict[Exp, Fraction]] = defaultdict(dict)
        for e, c in self.terms.items():
            parts[sum(e)][e] = c
        return {d: MultiPoly(self.nvars, t) for d, t in sorted(parts.items())}

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def scale_variables(self, signs: Sequence[int]) -> "MultiPoly":
        """Substitute x_i -> signs[i] * x_i (cheap special case of substitute)."""
        out = {}
        for e, c in self.terms.items():
            s = 1
            for x, g in zip(e, signs):
                if g < 0 and x % 2:
                    s = -s
            out[e] = c * s
        return MultiPoly(self.nvars, out)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable i by ``images[i]``.

        A negative exponent is only allowed when the image is a single monomial,
        since otherwise the result would leave the (Laurent) polynomial ring.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars if images else 0
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            if key not in cache:
                img = images[i]
                if k < 0 and len(img.terms) != 1:
                    raise ValueError(
                        f"cannot substitute a non-monomial into negative power of variable {i}"
                    )
                cache[key] = img ** k
            return cache[key]

        out = MultiPoly.zero(m)
        for e, c in self.terms.items():
            term = MultiPoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        pt = [_frac(p) for p in point]
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    if k < 0 and x == 0:
                        raise ZeroDivisionError("Laurent monomial evaluated at zero coordinate")
                    v *= x ** k
            total += v
        return total

    def graded_values(self, point: Sequence) -> dict[int, Fraction]:
        """Value of each homogeneous component at ``point`` (keyed by degree)."""
        out: dict[int, Fraction] = defaultdict(Fraction)
        pt = [_frac(p) for p in point]
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            out[sum(e)] += v
        return dict(out)

    # -- display ------------------------------------------------------
    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else [f"x{i + 1}" for i in range(self.nvars)]

        def key(item):
            e, _ = item
            return (-sum(e), tuple(-x for x in e))

        pieces = []
        for e, c in sorted(self.terms.items(), key=key):
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
            pieces.append(body)
        s = "+".join(pieces)
        return s.replace("+-", "-")

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"


# ---------------------------------------------------------------------------
# univariate polynomials (dense, lowest degree first) and rational functions

UPoly = tuple[Fraction, ...]


def _trim(p: Iterable) -> UPoly:
    p = [_frac(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def upoly_add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def upoly_mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def upoly_divmod(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = upoly_divmod(a, b)
        a, b = b, (tuple(c / r[-1] for c in r) if r else ())
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def upoly_eval(p: UPoly, x) -> Fraction:
    x = _frac(x)
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at one of its poles."""


class UniRat:
    """Reduced quotient of univariate polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable, den: Iterable = (1,), *, reduced: bool = False):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not reduced:
            if not num:
                den = (Fraction(1),)
            else:
                g = upoly_gcd(num, den)
                if len(g) > 1:
                    num, _ = upoly_divmod(num, g)
                    den, _ = upoly_divmod(den, g)
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c) -> "UniRat":
        return cls((c,))

    def __add__(self, other: "UniRat") -> "UniRat":
        if self.den == other.den:
            return UniRat(upoly_add(self.num, other.num), self.den)
        num = upoly_add(upoly_mul(self.num, other.den), upoly_mul(other.num, self.den))
        return UniRat(num, upoly_mul(self.den, other.den))

    def __neg__(self) -> "UniRat":
        return UniRat(tuple(-c for c in self.num), self.den, reduced=True)

    def __sub__(self, other: "UniRat") -> "UniRat":
        return self + (-other)

    def __mul__(self, other: "UniRat") -> "UniRat":
        return UniRat(upoly_mul(self.num, other.num), upoly_mul(self.den, other.den))

    def __truediv__(self, other: "UniRat") -> "UniRat":
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return UniRat(upoly_mul(self.num, other.den), upoly_mul(self.den, other.num))

    def __eq__(self, other):
        if not isinstance(other, UniRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def regular_at(self, a) -> bool:
        return upoly_eval(self.den, a) != 0

    def __call__(self, a) -> Fraction:
        return unirat_eval(self, a)

    def __repr__(self):
        return f"UniRat({list(map(str, self.num))} / {list(map(str, self.den))})"


def unirat_sum(terms: Iterable[UniRat]) -> UniRat:
    """Exact sum; pairwise reduction keeps intermediate denominators small."""
    items = list(terms)
    if not items:
        return UniRat.const(0)
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def unirat_eval(f: UniRat, a) -> Fraction:
    d = upoly_eval(f.den, a)
    if d == 0:
        raise PoleError(f"pole at {a}: denominator {list(map(str, f.den))} vanishes")
    return upoly_eval(f.num, a) / d
