"""Matroids on {1..n} stored as sorted tuples of basis bitmasks.

Element ``i`` (1-based) is bit ``i - 1``.  Subsets are passed around either as
masks (internally) or as iterables of 1-based elements (public helpers accept both).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

MAX_ENUM_N = 5


class MatroidError(ValueError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def to_mask(S) -> int:
    """Accept a mask or an iterable of 1-based elements."""
    if isinstance(S, int):
        return S
    m = 0
    for i in S:
        if i < 1:
            raise MatroidError(f"elements are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def elements(mask: int) -> list[int]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: tuple[int, ...]
    # original element names when this matroid came out of a minor; not part of equality
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        # bases are kept sorted and distinct so equality and hashing are canonical
        object.__setattr__(self, "bases", tuple(sorted(set(self.bases))))
        if not self.bases:
            raise MatroidError("a matroid needs at least one basis")
        if self.n > 62:
            raise MatroidError("ground sets above 62 elements are not supported")
        r = popcount(self.bases[0])
        if any(popcount(b) != r for b in self.bases):
            raise MatroidError("bases of unequal cardinality")
        if any(b >> self.n for b in self.bases):
            raise MatroidError("basis outside the ground set")

    @classmethod
    def from_bases(cls, n: int, bases: Iterable, check: bool = True, labels=None) -> "Matroid":
        masks = tuple(sorted({to_mask(b) for b in bases}))
        if check and not is_valid_matroid(n, masks):
            raise MatroidError("basis family violates the exchange axiom")
        return cls(n, masks, labels)

    @cached_property
    def rank(self) -> int:
        return popcount(self.bases[0])

    @property
    def corank(self) -> int:
        return self.n - self.rank

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def rank_table(self) -> tuple[int, ...]:
        """rank of every subset, indexed by mask."""
        return tuple(max(popcount(b & S) for b in self.bases) for S in range(1 << self.n))

    def rk(self, S) -> int:
        return self.rank_table[to_mask(S)]

    def is_independent(self, S) -> bool:
        S = to_mask(S)
        return self.rank_table[S] == popcount(S)

    def is_basis(self, S) -> bool:
        return to_mask(S) in self.basis_set

    def closure(self, S) -> int:
        S = to_mask(S)
        r = self.rank_table[S]
        cl = S
        for i in range(self.n):
            bit = 1 << i
            if not S & bit and self.rank_table[S | bit] == r:
                cl |= bit
        return cl

    @cached_property
    def loops(self) -> int:
        return full(self.n) & ~self._union_of_bases

    @cached_property
    def coloops(self) -> int:
        m = full(self.n)
        for b in self.bases:
            m &= b
        return m

    @cached_property
    def _union_of_bases(self) -> int:
        m = 0
        for b in self.bases:
            m |= b
        return m

    def basis_lists(self) -> list[list[int]]:
        return [elements(b) for b in self.bases]

    def to_json(self) -> dict:
        return {"n": self.n, "bases": self.basis_lists()}

    def __str__(self):
        name = known_name(self)
        if name:
            return name
        return f"Matroid(n={self.n}, bases={self.basis_lists()})"


def is_valid_matroid(n: int, bases) -> bool:
    masks = {to_mask(b) for b in bases}
    if not masks or any(m >> n for m in masks):
        return False
    sizes = {popcount(m) for m in masks}
    if len(sizes) != 1:
        return False
    for b1 in masks:
        for b2 in masks:
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            i = 0
            while diff1 >> i:
                if diff1 >> i & 1:
                    base = b1 & ~(1 << i)
                    if not any((base | (1 << j)) in masks for j in range(n) if diff2 >> j & 1):
                        return False
                i += 1
    return True


def rank(M: Matroid, S) -> int:
    return M.rk(S)


# -- constructors ---------------------------------------------------------


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, tuple(sorted(_ksubsets(n, r))))


def _ksubsets(n: int, k: int) -> list[int]:
    return [sum(1 << i for i in c) for c in itertools.combinations(range(n), k)]


def graphic(edges: Sequence[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``k`` becomes element ``k + 1``."""
    n = len(edges)

    def acyclic(mask: int) -> bool:
        parent: dict = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for k in range(n):
            if mask >> k & 1:
                a, b = find(edges[k][0]), find(edges[k][1])
                if a == b:
                    return False
                parent[a] = b
        return True

    indep = [m for m in range(1 << n) if acyclic(m)]
    r = max(popcount(m) for m in indep)
    return Matroid(n, tuple(sorted(m for m in indep if popcount(m) == r)))


def dual(M: Matroid) -> Matroid:
    E = full(M.n)
    return Matroid(M.n, tuple(sorted(E & ~b for b in M.bases)), M.labels)


def restrict_contract(M: Matroid, F: int, I: int) -> tuple[int, ...]:
    """Bases of M|F/I as masks inside the original ground set."""
    if I & ~F:
        raise MatroidError("contraction set must lie inside the restriction set")
    rt = M.rank_table
    rF, rI = rt[F], rt[I]
    target = rF - rI
    out = []
    rest = F & ~I
    sub = rest
    while True:
        if popcount(sub) == target and rt[sub | I] == rF:
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return tuple(sorted(out))


def _compress(mask: int, keep: list[int]) -> int:
    out = 0
    for pos, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << pos
    return out


def minor(M: Matroid, F, I) -> Matroid:
    """M|F/I relabeled onto 1..|F\\I|; ``labels`` records the original elements."""
    F, I = to_mask(F), to_mask(I)
    masks = restrict_contract(M, F, I)
    keep = [i for i in range(M.n) if (F & ~I) >> i & 1]
    old = M.labels or tuple(range(1, M.n + 1))
    return Matroid(len(keep), tuple(sorted(_compress(b, keep) for b in masks)),
                   tuple(old[i] for i in keep))


def delete(M: Matroid, e: int) -> Matroid:
    return minor(M, full(M.n) & ~(1 << (e - 1)), 0)


def contract(M: Matroid, e: int) -> Matroid:
    return minor(M, full(M.n), 1 << (e - 1))


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    return Matroid(M.n + N.n, tuple(sorted(a | (b << M.n) for a in M.bases for b in N.bases)))


def with_loops(M: Matroid, keep: Sequence[int], n: int) -> Matroid:
    """Embed M (on len(keep) elements) into {1..n} placing element j at ``keep[j]``; the rest are loops."""
    def spread(b):
        return sum(1 << (keep[j] - 1) for j in range(M.n) if b >> j & 1)
    return Matroid(n, tuple(sorted(spread(b) for b in M.bases)))


def _check_same_ground(M: Matroid, N: Matroid):
    if M.n != N.n:
        raise MatroidError(f"ground set sizes differ: {M.n} vs {N.n}")


def intersection(M: Matroid, N: Matroid) -> Matroid:
    """M ∧ N: the inclusion-minimal sets among B ∩ B'."""
    _check_same_ground(M, N)
    meets = {a & b for a in M.bases for b in N.bases}
    k = min(popcount(x) for x in meets)
    out = tuple(sorted(x for x in meets if popcount(x) == k))
    if not is_valid_matroid(M.n, out):
        raise MatroidError("intersection produced an invalid basis family")
    return Matroid(M.n, out)


def union(M: Matroid, N: Matroid) -> Matroid:
    """M ∨ N = (M⊥ ∧ N⊥)⊥: the inclusion-maximal sets among B ∪ B'."""
    _check_same_ground(M, N)
    joins = {a | b for a in M.bases for b in N.bases}
    k = max(popcount(x) for x in joins)
    out = tuple(sorted(x for x in joins if popcount(x) == k))
    if not is_valid_matroid(M.n, out):
        raise MatroidError("union produced an invalid basis family")
    return Matroid(M.n, out)


def disjoint_bases_pairing(M: Matroid, N: Matroid) -> int:
    _check_same_ground(M, N)
    if M.rank + N.rank != M.n:
        return 0
    return int(any(not a & b for a in M.bases for b in N.bases))


# -- orders, Schubert matroids --------------------------------------------


def _positions(order: Sequence[int]) -> dict[int, int]:
    return {e: k for k, e in enumerate(order)}


def check_order(order: Sequence[int], n: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise MatroidError(f"{order} is not a total order of 1..{n}")
    return order


def dominated(B: int, I: int, pos: dict[int, int]) -> bool:
    b = sorted(pos[e] for e in elements(B))
    c = sorted(pos[e] for e in elements(I))
    return len(b) == len(c) and all(x <= y for x, y in zip(b, c))


def schubert(order: Sequence[int], I) -> Matroid:
    n = len(order)
    order = check_order(order, n)
    I = to_mask(I)
    r = popcount(I)
    pos = _positions(order)
    return Matroid(n, tuple(sorted(B for B in _ksubsets(n, r) if dominated(B, I, pos))))


def lex_min_basis(M: Matroid, order: Sequence[int]) -> int:
    """Greedy basis: scan ``order`` and keep every element that raises the rank."""
    rt = M.rank_table
    B = 0
    for e in order:
        bit = 1 << (e - 1)
        if rt[B | bit] > rt[B]:
            B |= bit
    return B


def lex_min_basis_contracted(M: Matroid, I: int, order: Sequence[int]) -> int:
    """Lex-minimal basis of M/I, with M/I living on the elements listed in ``order``."""
    rt = M.rank_table
    B = 0
    for e in order:
        bit = 1 << (e - 1)
        if rt[I | B | bit] > rt[I | B]:
            B |= bit
    return B


# -- enumeration and lattices ----------------------------------------------


def enumerate_matroids(n: int, r: int | None = None) -> list[Matroid]:
    """All matroids on {1..n} (labeled, no isomorphism reduction)."""
    if n > MAX_ENUM_N:
        raise MatroidError(f"full enumeration is limited to n <= {MAX_ENUM_N}")
    ranks = range(n + 1) if r is None else [r]
    out = []
    for rr in ranks:
        cand = _ksubsets(n, rr)
        for choice in range(1, 1 << len(cand)):
            fam = [cand[k] for k in range(len(cand)) if choice >> k & 1]
            if is_valid_matroid(n, fam):
                out.append(Matroid(n, tuple(sorted(fam))))
    return out


def flats(M: Matroid) -> list[int]:
    return sorted((S for S in range(1 << M.n) if M.closure(S) == S), key=lambda S: (M.rk(S), S))


def independent_sets(M: Matroid) -> list[int]:
    return [S for S in range(1 << M.n) if M.is_independent(S)]


def is_schubert(M: Matroid) -> bool:
    for order in itertools.permutations(range(1, M.n + 1)):
        pos = _positions(order)
        # the top basis in the order is the only candidate for I
        top = max(M.bases, key=lambda B: sorted((pos[e] for e in elements(B)), reverse=True))
        if schubert(order, top) == M:
            return True
    return False


# -- names and parsing ------------------------------------------------------


def known_name(M: Matroid) -> str | None:
    if M == uniform(M.rank, M.n):
        return f"U_{{{M.rank},{M.n}}}"
    return None


def parse_matroid(spec: str) -> Matroid:
    """Parse ``uniform:r,n``, ``schubert:<perm>:<I>``, ``dual:<spec>``, ``sum:<a>+<b>``,
    ``graphic:1-2,2-3,...``, a JSON object, or a path to a JSON file."""
    spec = spec.strip()
    try:
        if spec.startswith("{"):
            return matroid_from_json(json.loads(spec))
        if spec.endswith(".json"):
            with open(spec) as fh:
                return matroid_from_json(json.load(fh))
        head, _, rest = spec.partition(":")
        if head == "uniform":
            r, n = (int(x) for x in rest.split(","))
            return uniform(r, n)
        if head == "schubert":
            perm, _, I = rest.partition(":")
            order = [int(x) for x in perm.split(",")]
            Iset = [int(x) for x in I.split(",") if x]
            return schubert(order, Iset)
        if head == "dual":
            return dual(parse_matroid(rest))
        if head == "sum":
            a, b = _split_top(rest, "+")
            return direct_sum(parse_matroid(a), parse_matroid(b))
        if head == "graphic":
            edges = [tuple(int(v) for v in e.split("-")) for e in rest.split(",")]
            return graphic(edges)
    except MatroidError:
        raise
    except (ValueError, OSError) as exc:
        raise MatroidError(f"cannot parse matroid spec {spec!r}: {exc}") from exc
    raise MatroidError(f"unknown matroid spec {spec!r} (position 0: {head!r})")


def _split_top(s: str, sep: str) -> tuple[str, str]:
    # split at the first separator outside braces so that JSON operands survive
    depth = 0
    for k, ch in enumerate(s):
        if ch in "{[":
            depth += 1
        elif ch in "}]":
            depth -= 1
        elif ch == sep and depth == 0:
            return s[:k], s[k + 1:]
    raise MatroidError(f"expected {sep!r} in {s!r}")


def matroid_from_json(obj: dict) -> Matroid:
    if "n" not in obj or "bases" not in obj:
        raise MatroidError("matroid JSON needs keys 'n' and 'bases'")
    return Matroid.from_bases(int(obj["n"]), [tuple(b) for b in obj["bases"]])
