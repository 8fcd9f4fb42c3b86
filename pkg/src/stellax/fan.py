"""The stellahedral fan on E = {1..n}, its walls, stars and augmented Bergman subfans.

A cone is a compatible pair (I, chain): I is a subset, chain a strictly increasing
tuple of proper subsets (the empty set allowed) each containing I.  Its rays are
e_i for i in I and -e_{E\\F} for F in the chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import itertools
from functools import lru_cache
from typing import Iterator

from .matroid import Matroid, elements, full, popcount, to_mask, flats

MAX_FAN_N = 7

# a ray is ("e", i) with i 1-based, or ("S", mask) for -e_{E \ S}
Ray = tuple[str, int]


class FanError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ConePair:
    I: int
    chain: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return popcount(self.I) + len(self.chain)

    def rays(self) -> list[Ray]:
        return [("e", i) for i in elements(self.I)] + [("S", F) for F in self.chain]

    def ray_set(self) -> frozenset:
        return frozenset(self.rays())

    def key(self) -> str:
        chain = ",".join(str(elements(F)) for F in self.chain)
        return f"I={elements(self.I)}|chain=[{chain}]".replace(" ", "")

    def __str__(self):
        return self.key()


def parse_cone(text: str) -> ConePair:
    left, _, right = text.partition("|")
    I = to_mask(_parse_list(left.split("=", 1)[1]))
    body = right.split("=", 1)[1].strip()[1:-1]
    chain = []
    depth, start = 0, None
    for k, ch in enumerate(body):
        if ch == "[":
            depth += 1
            if depth == 1:
                start = k
        elif ch == "]":
            depth -= 1
            if depth == 0:
                chain.append(to_mask(_parse_list(body[start:k + 1])))
    return ConePair(I, tuple(chain))


def _parse_list(s: str) -> list[int]:
    s = s.strip().strip("[]")
    return [int(x) for x in s.split(",") if x.strip()]


def _guard(n: int):
    if n > MAX_FAN_N:
        raise FanError(f"fan enumeration is limited to n <= {MAX_FAN_N}")


def is_compatible(n: int, cone: ConePair) -> bool:
    E = full(n)
    prev = -1
    for F in cone.chain:
        if F == E or F & ~E:
            return False
        if prev >= 0 and (F & prev != prev or F == prev):
            return False
        if cone.I & ~F:
            return False
        prev = F
    return not cone.I & ~E


def generator(n: int, ray: Ray) -> tuple[int, ...]:
    kind, v = ray
    if kind == "e":
        return tuple(1 if j == v - 1 else 0 for j in range(n))
    comp = full(n) & ~v
    return tuple(-1 if comp >> j & 1 else 0 for j in range(n))


def rays(n: int) -> list[Ray]:
    return [("e", i) for i in range(1, n + 1)] + [("S", S) for S in range(full(n))]


def _chains_above(n: int, lower: int, prev: int | None) -> Iterator[tuple[int, ...]]:
    """All chains of proper subsets, each strictly above ``prev`` and containing ``lower``."""
    yield ()
    E = full(n)
    for F in range(E):
        if F & lower != lower:
            continue
        if prev is not None and (F & prev != prev or F == prev):
            continue
        for rest in _chains_above(n, lower, F):
            yield (F,) + rest


@lru_cache(maxsize=None)
def all_cones(n: int) -> tuple[ConePair, ...]:
    _guard(n)
    out = []
    for I in range(1 << n):
        for chain in _chains_above(n, I, None):
            out.append(ConePair(I, chain))
    return tuple(sorted(out, key=lambda c: (c.dim, c)))


def cones(n: int, d: int) -> list[ConePair]:
    return [c for c in all_cones(n) if c.dim == d]


@lru_cache(maxsize=None)
def maximal_cones(n: int) -> tuple[ConePair, ...]:
    _guard(n)
    out = []
    for I in range(1 << n):
        rest = [i for i in range(1, n + 1) if not I >> (i - 1) & 1]
        for perm in itertools.permutations(rest):
            chain, F = [], I
            for e in perm:
                chain.append(F)
                F |= 1 << (e - 1)
            out.append(ConePair(I, tuple(chain)))
    return tuple(sorted(out))


def cone_order(n: int, sigma: ConePair) -> tuple[int, ...]:
    """For a maximal cone, the order a_1 < ... < a_k it induces on E \\ I."""
    E = full(n)
    seq = list(sigma.chain) + [E]
    out = []
    for a, b in zip(seq, seq[1:]):
        d = elements(b & ~a)
        if len(d) != 1:
            raise FanError(f"{sigma} is not maximal")
        out.extend(d)
    return tuple(out)


def cone_from_order(I: int, order) -> ConePair:
    chain, F = [], I
    for e in order:
        chain.append(F)
        F |= 1 << (e - 1)
    return ConePair(I, tuple(chain))


def _inverse(mat: list[list[int]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise FanError("singular generator matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                m = a[r][col]
                a[r] = [x - m * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def dual_basis(n: int, sigma: ConePair) -> dict:
    """ray -> integer covector u with <u, g_rho'> = [rho == rho'] over the rays of sigma."""
    rs = sigma.rays()
    if len(rs) != n:
        raise FanError(f"{sigma} is not maximal")
    G = [list(generator(n, r)) for r in rs]
    inv = _inverse(G)  # G @ inv = id, so column k of inv is dual to row k of G
    out = {}
    for k, r in enumerate(rs):
        col = [inv[j][k] for j in range(n)]
        if any(x.denominator != 1 for x in col):
            raise FanError(f"{sigma} is not unimodular")
        out[r] = tuple(int(x) for x in col)
    return out


def generator_det(n: int, sigma: ConePair) -> int:
    import sympy
    return int(sympy.Matrix([list(generator(n, r)) for r in sigma.rays()]).det())


@lru_cache(maxsize=None)
def cones_containing(n: int, tau: ConePair) -> tuple[ConePair, ...]:
    rs = tau.ray_set()
    return tuple(s for s in maximal_cones(n) if rs <= s.ray_set())


def contains(sigma: ConePair, tau: ConePair) -> bool:
    return tau.ray_set() <= sigma.ray_set()


def drop_ray(cone: ConePair, ray: Ray) -> ConePair:
    kind, v = ray
    if kind == "e":
        return ConePair(cone.I & ~(1 << (v - 1)), cone.chain)
    return ConePair(cone.I, tuple(F for F in cone.chain if F != v))


def facets(cone: ConePair) -> list[tuple[Ray, ConePair]]:
    return [(r, drop_ray(cone, r)) for r in cone.rays()]


@dataclass(frozen=True)
class Wall:
    tau: ConePair
    sigma: ConePair
    sigma2: ConePair
    v: tuple[int, ...]
    kind: int  # 1 for v = e_i - e_j, 2 for v = e_j


def _normalize(v: tuple[int, ...]) -> tuple[int, ...]:
    first = next(x for x in v if x)
    return tuple(-x for x in v) if first < 0 else v


@lru_cache(maxsize=None)
def walls(n: int) -> tuple[Wall, ...]:
    seen: dict[ConePair, list] = {}
    for s in maximal_cones(n):
        ub = dual_basis(n, s)
        for r, tau in facets(s):
            seen.setdefault(tau, []).append((s, ub[r]))
    out = []
    for tau, inc in sorted(seen.items()):
        if len(inc) != 2:
            raise FanError(f"wall {tau} meets {len(inc)} maximal cones")
        (s1, u1), (s2, u2) = inc
        v = _normalize(u1)
        if _normalize(u2) != v:
            raise FanError(f"inconsistent normals across {tau}")
        nz = [x for x in v if x]
        if sorted(nz) == [-1, 1]:
            kind = 1
        elif nz == [1]:
            kind = 2
        else:
            raise FanError(f"unexpected wall character {v}")
        out.append(Wall(tau, s1, s2, v, kind))
    return tuple(out)


@dataclass(frozen=True)
class StarFactor:
    kind: str  # "stellahedral" or "permutohedral"
    ground: tuple[int, ...]


def star(n: int, cone: ConePair) -> list[StarFactor]:
    """Product decomposition of the star of a cone; zero-dimensional factors are omitted."""
    E = full(n)
    out = []
    top = cone.chain[0] if cone.chain else E
    stel = top & ~cone.I
    if stel:
        out.append(StarFactor("stellahedral", tuple(elements(stel))))
    seq = list(cone.chain) + [E]
    for a, b in zip(seq, seq[1:]):
        d = b & ~a
        if popcount(d) > 1:
            out.append(StarFactor("permutohedral", tuple(elements(d))))
    return out


def star_coordinates(n: int, tau: ConePair, sigma: ConePair) -> tuple:
    """Maximal cone of star(tau) corresponding to a maximal sigma containing tau:
    (I_sigma \\ I_tau, order on F_1 \\ I_sigma) for the stellahedral factor, then the
    orders induced on the successive differences of the chain of tau."""
    order = cone_order(n, sigma)
    E = full(n)
    top = tau.chain[0] if tau.chain else E
    blocks = []
    seq = list(tau.chain) + [E]
    for a, b in zip(seq, seq[1:]):
        blocks.append(tuple(e for e in order if (b & ~a) >> (e - 1) & 1))
    stel = (tuple(elements(sigma.I & ~tau.I)), tuple(e for e in order if top >> (e - 1) & 1))
    return (stel,) + tuple(blocks)


def augmented_bergman_fan(M: Matroid, d: int | None = None) -> list[ConePair]:
    """Cones (I, chain) with I independent and every chain member a proper flat."""
    n = M.n
    E = full(n)
    fl = set(flats(M)) - {E}
    out = []
    for c in all_cones(n):
        if d is not None and c.dim != d:
            continue
        if M.is_independent(c.I) and all(F in fl for F in c.chain):
            out.append(c)
    return out


def bergman_fan(M: Matroid) -> list[tuple[int, ...]]:
    """Chains of nonempty proper flats (the star of rho_empty); empty when M has a loop."""
    if M.loops:
        return []
    n = M.n
    E = full(n)
    fl = [F for F in flats(M) if F and F != E]
    out = []
    for c in all_cones(n):
        if c.I == 0 and c.chain and c.chain[0] == 0 and all(F in fl for F in c.chain[1:]):
            out.append(c.chain[1:])
    return out


@dataclass(frozen=True)
class TangentFrame:
    cone: ConePair
    rays: tuple
    weights: tuple[tuple[int, ...], ...]
    sign: int


def tangent_frame(n: int, sigma: ConePair, sign: int | None = None) -> TangentFrame:
    if sign is None:
        from .eqclasses import calibrated_sign
        sign = calibrated_sign()
    ub = dual_basis(n, sigma)
    rs = tuple(sigma.rays())
    return TangentFrame(sigma, rs, tuple(ub[r] for r in rs), sign)
