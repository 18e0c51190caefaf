"""Square-free monomials, ideal pairs J <= I and the poset of I \\ J.

A square-free monomial in x1..xn is stored as an ``int`` bitmask: bit ``i - 1``
is set when ``x<i>`` divides it. The unit monomial is ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

Monomial = int


class InstanceError(ValueError):
    """Malformed instance text or an invalid ideal pair."""


class ZeroModuleError(ValueError):
    """Raised when I = J, i.e. the module I/J is zero."""


def degree(m: Monomial) -> int:
    return bin(m).count("1")


def divides(u: Monomial, v: Monomial) -> bool:
    return u & ~v == 0


def variables(m: Monomial) -> list[int]:
    """1-based indices of the variables dividing ``m``."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def var(i: int) -> Monomial:
    return 1 << (i - 1)


def canonical_key(m: Monomial) -> tuple[int, int]:
    return (degree(m), m)


def format_monomial(m: Monomial) -> str:
    if m == 0:
        return "1"
    return "*".join(f"x{i}" for i in variables(m))


def submasks(m: Monomial) -> Iterator[Monomial]:
    """All submasks of ``m``, from ``m`` down to 0."""
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def member(m: Monomial, gens: Iterable[Monomial]) -> bool:
    return any(g & ~m == 0 for g in gens)


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators (an antichain), in canonical order."""
    out: list[Monomial] = []
    for g in sorted(set(gens), key=canonical_key):
        if not any(h & ~g == 0 for h in out):
            out.append(g)
    return tuple(out)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return u | v


def permute(m: Monomial, perm: dict[int, int]) -> Monomial:
    """Apply the variable relabeling ``x_i -> x_perm[i]`` (1-based)."""
    out = 0
    for i in variables(m):
        out |= var(perm[i])
    return out


_MON_RE = re.compile(r"^x(\d+)$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return 0
    if not text:
        raise InstanceError("empty monomial")
    m = 0
    for factor in text.split("*"):
        factor = factor.strip()
        match = _MON_RE.match(factor)
        if not match:
            raise InstanceError(f"bad factor {factor!r} in monomial {text!r}")
        i = int(match.group(1))
        if i < 1 or i > n:
            raise InstanceError(f"variable x{i} out of range 1..{n}")
        if m & var(i):
            raise InstanceError(f"monomial {text!r} is not square-free (x{i} repeated)")
        m |= var(i)
    return m


@dataclass(frozen=True)
class IdealPair:
    """Minimal generators of two square-free monomial ideals J <= I in n variables.

    Construct through :meth:`make` (or :func:`parse_ideal_pair`), which
    minimalizes and validates. ``gens_j`` empty means J = 0; a unit generator
    in ``gens_i`` means I = S.
    """

    n: int
    gens_i: tuple[Monomial, ...]
    gens_j: tuple[Monomial, ...] = ()

    @classmethod
    def make(cls, n: int, gens_i: Iterable[Monomial], gens_j: Iterable[Monomial] = ()) -> "IdealPair":
        if n < 1:
            raise InstanceError("n must be >= 1")
        full = (1 << n) - 1
        gi = minimalize(gens_i)
        gj = minimalize(gens_j)
        for g in gi + gj:
            if g & ~full:
                raise InstanceError(f"generator {g:#b} uses a variable beyond x{n}")
        for g in gj:
            if not member(g, gi):
                raise InstanceError(f"J is not contained in I: {format_monomial(g)} not in I")
        return cls(n, gi, gj)

    def member_i(self, m: Monomial) -> bool:
        return member(m, self.gens_i)

    def member_j(self, m: Monomial) -> bool:
        return member(m, self.gens_j)

    @property
    def d(self) -> int:
        if not self.gens_i:
            raise ZeroModuleError("I = 0")
        return min(degree(g) for g in self.gens_i)

    @cached_property
    def membership(self) -> int:
        """Bitset over all 2^n masks; bit m set iff m lies in I \\ J."""
        in_i = _upward_closure(self.gens_i, self.n)
        in_j = _upward_closure(self.gens_j, self.n)
        return in_i & ~in_j

    def is_zero(self) -> bool:
        return self.membership == 0

    def with_gens(self, gens_i: Optional[Iterable[Monomial]] = None,
                  gens_j: Optional[Iterable[Monomial]] = None) -> "IdealPair":
        return IdealPair.make(
            self.n,
            self.gens_i if gens_i is None else gens_i,
            self.gens_j if gens_j is None else gens_j,
        )

    def permuted(self, perm: dict[int, int]) -> "IdealPair":
        return IdealPair.make(
            self.n,
            [permute(g, perm) for g in self.gens_i],
            [permute(g, perm) for g in self.gens_j],
        )

    def to_text(self) -> str:
        i_part = ", ".join(format_monomial(g) for g in self.gens_i) or "0"
        j_part = ", ".join(format_monomial(g) for g in self.gens_j) or "0"
        return f"n = {self.n}\nI: {i_part}\nJ: {j_part}\n"

    def __str__(self) -> str:
        return self.to_text().strip().replace("\n", "; ")


def _upward_closure(gens: tuple[Monomial, ...], n: int) -> int:
    bits = 0
    for m in range(1 << n):
        if any(g & ~m == 0 for g in gens):
            bits |= 1 << m
    return bits


def parse_ideal_pair(text: str) -> IdealPair:
    """Parse the instance format::

        n = 4
        I: x1, x2        # comments allowed
        J: x1*x2

    Whitespace is insignificant. ``J: 0`` denotes the zero ideal.
    """
    n: Optional[int] = None
    lines: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        compact = re.sub(r"\s+", "", line)
        if compact.startswith("n="):
            if n is not None:
                raise InstanceError("duplicate n line")
            try:
                n = int(compact[2:])
            except ValueError:
                raise InstanceError(f"bad n line: {raw!r}") from None
            continue
        head, sep, body = compact.partition(":")
        if not sep or head not in ("I", "J"):
            raise InstanceError(f"unrecognized line: {raw!r}")
        if head in lines:
            raise InstanceError(f"duplicate {head} line")
        lines[head] = body
    if n is None:
        raise InstanceError("missing n line")
    if n < 1:
        raise InstanceError("n must be >= 1")
    if "I" not in lines or "J" not in lines:
        raise InstanceError("both I and J lines are required")

    def gens(body: str, name: str) -> list[Monomial]:
        if body == "0":
            return []
        if not body:
            raise InstanceError(f"empty generator list for {name}")
        return [parse_monomial(tok, n) for tok in body.split(",")]

    return IdealPair.make(n, gens(lines["I"], "I"), gens(lines["J"], "J"))


@dataclass(frozen=True)
class Poset:
    """The square-free monomials of I \\ J ordered by divisibility."""

    n: int
    elements: tuple[Monomial, ...]
    bits: int = field(repr=False)

    def __contains__(self, m: Monomial) -> bool:
        return (self.bits >> m) & 1 == 1

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def of_degree(self, k: int) -> list[Monomial]:
        return [m for m in self.elements if degree(m) == k]

    @property
    def min_degree(self) -> int:
        return degree(self.elements[0])

    def is_convex(self) -> bool:
        for u in self.elements:
            for v in self.elements:
                if u & ~v == 0:
                    rest = v & ~u
                    for s in submasks(rest):
                        if (u | s) not in self:
                            return False
        return True


def build_poset(ip: IdealPair) -> Poset:
    bits = ip.membership
    if bits == 0:
        raise ZeroModuleError("empty poset: I = J")
    elements = tuple(sorted((m for m in range(1 << ip.n) if (bits >> m) & 1), key=canonical_key))
    return Poset(ip.n, elements, bits)


@dataclass(frozen=True)
class DegreeStats:
    """Counts of I \\ J in degrees d, d+1, d+2.

    ``e``, ``e1`` and ``e2`` (E, E' and E'') are filled only when I is
    generated by one variable ``x<pivot>`` and a nonempty set E of degree-2
    monomials; otherwise they are ``None``.
    """

    d: int
    r: int
    B: tuple[Monomial, ...]
    C: tuple[Monomial, ...]
    pivot: Optional[int] = None
    e: Optional[tuple[Monomial, ...]] = None
    e1: Optional[tuple[Monomial, ...]] = None
    e2: Optional[tuple[Monomial, ...]] = None

    @property
    def s(self) -> int:
        return len(self.B)

    @property
    def q(self) -> int:
        return len(self.C)


def single_variable_shape(ip: IdealPair) -> Optional[tuple[int, tuple[Monomial, ...]]]:
    """Detect I = (x_v) + (E) with E nonempty, all of degree 2.

    Returns ``(v, E)``; the variable playing the role of x1 is located by
    search, so any relabeling of the shape is recognized.
    """
    linear = [g for g in ip.gens_i if degree(g) == 1]
    rest = [g for g in ip.gens_i if degree(g) != 1]
    if len(linear) != 1 or not rest or any(degree(g) != 2 for g in rest):
        return None
    return variables(linear[0])[0], tuple(rest)


def degree_stats(ip: IdealPair, d: Optional[int] = None) -> DegreeStats:
    poset = build_poset(ip)
    if d is None:
        d = ip.d
    r = len(poset.of_degree(d))
    B = tuple(poset.of_degree(d + 1))
    C = tuple(poset.of_degree(d + 2))
    shape = single_variable_shape(ip)
    if shape is None:
        return DegreeStats(d, r, B, C)
    pivot, E = shape
    x = var(pivot)
    e1 = tuple(a for a in E if (a | x) in poset and degree(a | x) == d + 2)
    e2 = tuple(a for a in E if a not in e1)
    return DegreeStats(d, r, B, C, pivot, E, e1, e2)
