"""Depth of I/J from Koszul homology in square-free multidegrees.

For a square-free multidegree ``a`` the slice K(x; I/J)_a has basis
``x^(a - tau) e_tau`` for the subsets ``tau`` of ``a`` with ``a - tau`` in P.
The differential sends ``e_tau`` to ``sum_j (-1)^pos(j) x_j e_(tau - j)``, the
term vanishing when ``a - (tau - j)`` falls outside P. Then

    depth I/J = n - max{p : H_p(x; I/J)_a != 0 for some a}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import IdealPair, Monomial, ZeroModuleError, degree, format_monomial, submasks
from .linalg import matmul, rank_mod_p, rank_rational


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q (``p == 0``) or GF(p)."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "rationals", "0"):
            return cls(0)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:P'")

    def rank(self, matrix: list[list[int]]) -> int:
        if self.p == 0:
            return rank_rational(matrix)
        return rank_mod_p(matrix, self.p)

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"


RATIONALS = FieldSpec(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class KoszulSlice:
    """The chain complex K(x; I/J)_a.

    ``bases[p]`` lists the sets tau (as masks, ascending) spanning C_p and
    ``boundaries[p]`` is the matrix of C_p -> C_(p-1), rows indexed by
    ``bases[p-1]``; ``boundaries[0]`` is empty.
    """

    a: Monomial
    bases: tuple[tuple[Monomial, ...], ...]
    boundaries: tuple[list[list[int]], ...] = field(repr=False)

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]


def koszul_sign(tau: Monomial, j: int) -> int:
    """(-1)^(position of bit j among the set bits of tau, counted from 0)."""
    below = tau & ((1 << j) - 1)
    return -1 if degree(below) % 2 else 1


def _slice_from_family(a: Monomial, inside: int) -> KoszulSlice:
    """Slice at ``a`` where ``inside`` is a bitset over masks: the members of P."""
    top = degree(a)
    bases: list[list[Monomial]] = [[] for _ in range(top + 1)]
    for tau in sorted(submasks(a)):
        if (inside >> (a & ~tau)) & 1:
            bases[degree(tau)].append(tau)
    index = [{t: i for i, t in enumerate(b)} for b in bases]
    boundaries: list[list[list[int]]] = [[]]
    for p in range(1, top + 1):
        mat = [[0] * len(bases[p]) for _ in range(len(bases[p - 1]))]
        for col, tau in enumerate(bases[p]):
            t = tau
            while t:
                low = t & -t
                j = low.bit_length() - 1
                row = index[p - 1].get(tau & ~low)
                if row is not None:
                    mat[row][col] = koszul_sign(tau, j)
                t &= t - 1
        boundaries.append(mat)
    for p in range(1, top):
        lower, upper = boundaries[p], boundaries[p + 1]
        if lower and upper and upper[0]:
            product = matmul(lower, upper)
            assert all(x == 0 for row in product for x in row), "boundary squared is nonzero"
    return KoszulSlice(a, tuple(tuple(b) for b in bases), tuple(boundaries))


def koszul_slice(ip: IdealPair, a: Monomial) -> KoszulSlice:
    if ip.is_zero():
        raise ZeroModuleError("zero module")
    return _slice_from_family(a, ip.membership)


def homology_ranks(slc: KoszulSlice, field: FieldSpec = RATIONALS) -> list[int]:
    dims = slc.dims()
    ranks = [0] * (len(dims) + 1)
    for p in range(1, len(dims)):
        mat = slc.boundaries[p]
        if mat and mat[0]:
            ranks[p] = field.rank(mat)
    return [dims[p] - ranks[p] - ranks[p + 1] for p in range(len(dims))]


def euler_characteristic_holds(slc: KoszulSlice, ranks: list[int]) -> bool:
    chain = sum((-1) ** p * d for p, d in enumerate(slc.dims()))
    homology = sum((-1) ** p * h for p, h in enumerate(ranks))
    return chain == homology


def _compress(a: Monomial, inside: int) -> tuple[int, int]:
    """Restrict P to subsets of ``a`` and renumber a's variables as 0..k-1."""
    bits = [i for i in range(a.bit_length()) if (a >> i) & 1]
    k = len(bits)
    family = 0
    for local in range(1 << k):
        m = 0
        for t in range(k):
            if (local >> t) & 1:
                m |= 1 << bits[t]
        if (inside >> m) & 1:
            family |= 1 << local
    return k, family


@lru_cache(maxsize=1 << 16)
def _local_ranks(k: int, family: int, field: FieldSpec) -> tuple[int, ...]:
    if family == 0:
        return (0,) * (k + 1)
    return tuple(homology_ranks(_slice_from_family((1 << k) - 1, family), field))


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero Koszul homology ranks, keyed by square-free multidegree."""

    n: int
    field: FieldSpec
    ranks: dict[Monomial, tuple[int, ...]]

    @property
    def max_nonzero(self) -> int:
        return max(p for vec in self.ranks.values() for p, h in enumerate(vec) if h)

    @property
    def depth(self) -> int:
        return self.n - self.max_nonzero

    def rows(self) -> list[dict]:
        out = []
        for a in sorted(self.ranks):
            for p, h in enumerate(self.ranks[a]):
                if h:
                    out.append({"multidegree": format_monomial(a), "p": p, "rank": h})
        return out

    def rank_at(self, a: Monomial, p: int) -> int:
        vec = self.ranks.get(a)
        if vec is None or p >= len(vec):
            return 0
        return vec[p]


def homology_profile(ip: IdealPair, field: FieldSpec = RATIONALS) -> HomologyProfile:
    if ip.is_zero():
        raise ZeroModuleError("zero module")
    inside = ip.membership
    ranks: dict[Monomial, tuple[int, ...]] = {}
    for a in range(1 << ip.n):
        vec = _local_ranks(*_compress(a, inside), field)
        if any(vec):
            ranks[a] = vec
    return HomologyProfile(ip.n, field, ranks)


def depth(ip: IdealPair, field: FieldSpec = RATIONALS) -> tuple[int, HomologyProfile]:
    profile = homology_profile(ip, field)
    return profile.depth, profile


@lru_cache(maxsize=1 << 14)
def depth_value(ip: IdealPair, field: FieldSpec = RATIONALS) -> int:
    """Depth only; scans multidegrees from the top so it can stop early.

    H_p at multidegree ``a`` vanishes for p > deg a, so once homology in
    degree p is found, multidegrees of degree <= p cannot raise the maximum.
    """
    if ip.is_zero():
        raise ZeroModuleError("zero module")
    inside = ip.membership
    best = -1
    for a in sorted(range(1 << ip.n), key=lambda m: -degree(m)):
        if degree(a) <= best:
            break
        vec = _local_ranks(*_compress(a, inside), field)
        for p in range(len(vec) - 1, best, -1):
            if vec[p]:
                best = p
                break
    return ip.n - best


def depth_of_quotient_ring(ip: IdealPair, field: FieldSpec = RATIONALS) -> int:
    """Depth of S/J for a pair whose I is the unit ideal."""
    if ip.gens_i != (0,):
        raise ValueError("expected I = S (unit generator)")
    if ip.gens_j == (0,):
        raise ZeroModuleError("J = S")
    return depth_value(ip, field)


def quotient_ring(n: int, gens: tuple[Monomial, ...] | list[Monomial]) -> IdealPair:
    return IdealPair.make(n, [0], gens)


def profile_from_rows(n: int, field: FieldSpec, rows: list[dict], parse) -> HomologyProfile:
    ranks: dict[Monomial, list[int]] = {}
    for row in rows:
        a = parse(row["multidegree"])
        vec = ranks.setdefault(a, [0] * (degree(a) + 1))
        vec[row["p"]] = row["rank"]
    return HomologyProfile(n, field, {a: tuple(v) for a, v in ranks.items()})


__all__ = [
    "FieldSpec",
    "RATIONALS",
    "KoszulSlice",
    "HomologyProfile",
    "koszul_slice",
    "homology_ranks",
    "homology_profile",
    "depth",
    "depth_value",
    "depth_of_quotient_ring",
    "quotient_ring",
    "euler_characteristic_holds",
    "koszul_sign",
]

