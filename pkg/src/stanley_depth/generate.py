"""Seeded random and exhaustive streams of ideal pairs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .core import IdealPair, Monomial, canonical_key, degree, member, minimalize, var

MAX_RANDOM_N = 8
MAX_ENUM_N = 5

SHAPES = ("general", "thm110", "thm110q", "vars", "prop13", "stanley")


class InfeasibleConfig(ValueError):
    pass


@dataclass(frozen=True)
class InstanceGenConfig:
    """Parameters of a random instance stream.

    Shapes: ``general`` (I, J drawn from the degree windows), ``stanley``
    (J = 0), ``vars`` (I = (x1..xr)), ``prop13`` (variables plus higher
    generators, J holding every x_i x_t x_k), ``thm110`` (I = (x1) + (E), E
    of degree 2) and ``thm110q`` (as ``thm110`` with x1*u in J for each
    degree-2 u outside I).

    ``density`` maps a degree to the probability that a monomial of that
    degree is drawn as a generator candidate; degrees not listed use
    ``default_density``.
    """

    n: int
    seed: int = 0
    shape: str = "general"
    i_degrees: tuple[int, int] = (1, 2)
    j_degrees: tuple[int, int] = (2, 4)
    density: dict[int, float] = field(default_factory=dict)
    default_density: float = 0.25

    def validate(self) -> None:
        if not 1 <= self.n <= MAX_RANDOM_N:
            raise InfeasibleConfig(f"n must lie in 1..{MAX_RANDOM_N}")
        if self.shape not in SHAPES:
            raise InfeasibleConfig(f"unknown shape {self.shape!r}")
        for name, (lo, hi) in (("I", self.i_degrees), ("J", self.j_degrees)):
            if lo > hi or lo < 0 or lo > self.n:
                raise InfeasibleConfig(f"empty degree window for {name}: {lo}..{hi}")
        probs = list(self.density.values()) + [self.default_density]
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise InfeasibleConfig("densities must lie in [0, 1]")
        if self.shape in ("thm110", "thm110q", "vars", "prop13") and self.n < 2:
            raise InfeasibleConfig(f"shape {self.shape} needs n >= 2")

    def prob(self, k: int) -> float:
        return self.density.get(k, self.default_density)


def _masks_of_degree(n: int, lo: int, hi: int) -> list[Monomial]:
    return sorted((m for m in range(1 << n) if lo <= degree(m) <= hi), key=canonical_key)


def _sample(rng: random.Random, pool: list[Monomial], cfg: InstanceGenConfig) -> list[Monomial]:
    return [m for m in pool if rng.random() < cfg.prob(degree(m))]


def _random_j(rng: random.Random, cfg: InstanceGenConfig, gens_i: tuple[Monomial, ...],
              forced: tuple[Monomial, ...] = ()) -> tuple[Monomial, ...]:
    lo, hi = cfg.j_degrees
    pool = [m for m in _masks_of_degree(cfg.n, lo, hi) if member(m, gens_i)]
    return minimalize(list(forced) + _sample(rng, pool, cfg))


def _one(rng: random.Random, cfg: InstanceGenConfig) -> Optional[IdealPair]:
    n = cfg.n
    if cfg.shape in ("general", "stanley"):
        pool = _masks_of_degree(n, *cfg.i_degrees)
        gens_i = minimalize(_sample(rng, pool, cfg) or [rng.choice(pool)])
        gens_j: tuple[Monomial, ...] = () if cfg.shape == "stanley" else _random_j(rng, cfg, gens_i)
    elif cfg.shape in ("thm110", "thm110q"):
        quads = [m for m in _masks_of_degree(n, 2, 2) if not m & 1]
        if not quads:
            return None
        chosen = [m for m in quads if rng.random() < 0.5] or [rng.choice(quads)]
        gens_i = minimalize([1] + chosen)
        forced: tuple[Monomial, ...] = ()
        if cfg.shape == "thm110q":
            # x1*u in J for every degree-2 u outside I
            forced = tuple(u | 1 for u in quads if not member(u, gens_i))
        gens_j = _random_j(rng, cfg, gens_i, forced)
    elif cfg.shape == "vars":
        r = rng.randint(1, n - 1)
        gens_i = tuple(var(i) for i in range(1, r + 1))
        gens_j = _random_j(rng, cfg, gens_i)
    else:  # prop13
        r = rng.randint(1, n - 1)
        block = (1 << r) - 1
        extra = [m for m in _masks_of_degree(n, 2, 3) if not m & block and rng.random() < cfg.prob(degree(m))]
        gens_i = minimalize([var(i) for i in range(1, r + 1)] + extra)
        free = [t for t in range(r + 1, n + 1)]
        forced = tuple(var(i) | var(t) | var(k) for i in range(1, r + 1) for t, k in combinations(free, 2))
        gens_j = _random_j(rng, cfg, gens_i, forced)
    ip = IdealPair.make(n, gens_i, gens_j)
    return None if ip.is_zero() else ip


def generate_instances(cfg: InstanceGenConfig, count: int) -> Iterator[IdealPair]:
    """``count`` random nonzero pairs; identical configs give identical streams."""
    cfg.validate()
    rng = random.Random(cfg.seed)
    produced = 0
    misses = 0
    while produced < count:
        ip = _one(rng, cfg)
        if ip is None:
            misses += 1
            if misses > 1000 + 10 * count:
                raise InfeasibleConfig("configuration rarely yields a nonzero module")
            continue
        produced += 1
        yield ip


@lru_cache(maxsize=None)
def antichains(n: int, pool: Optional[tuple[Monomial, ...]] = None) -> tuple[tuple[Monomial, ...], ...]:
    """All antichains of square-free monomials (within ``pool``), canonically ordered.

    The empty antichain (the zero ideal) is included.
    """
    if pool is None:
        pool = tuple(sorted(range(1 << n), key=canonical_key))
    out: list[tuple[Monomial, ...]] = []

    def extend(start: int, chosen: list[Monomial]) -> None:
        out.append(tuple(chosen))
        for idx in range(start, len(pool)):
            m = pool[idx]
            if any(g & ~m == 0 or m & ~g == 0 for g in chosen):
                continue
            chosen.append(m)
            extend(idx + 1, chosen)
            chosen.pop()

    extend(0, [])
    out.sort(key=lambda a: (len(a), [canonical_key(m) for m in a]))
    return tuple(out)


def _closure(gens: tuple[Monomial, ...], n: int) -> int:
    bits = 0
    for m in range(1 << n):
        if any(g & ~m == 0 for g in gens):
            bits |= 1 << m
    return bits


def enumerate_all(n: int, shape: Optional[str] = None) -> Iterator[IdealPair]:
    """Every pair J < I (I != J) on n variables, each exactly once.

    ``shape``: ``None`` for all pairs, ``"thm110"`` for I = (x1) + (E) with
    E a nonempty set of degree-2 monomials in x2..xn and J generated in
    degree >= 2, ``"stanley"`` for J = 0.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise InfeasibleConfig(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if shape is None:
        chains = antichains(n)
        closures = [_closure(a, n) for a in chains]
        for gi, ci in zip(chains, closures):
            if not gi:
                continue
            for gj, cj in zip(chains, closures):
                if cj & ~ci == 0 and cj != ci:
                    yield IdealPair(n, gi, gj)
    elif shape == "stanley":
        for gi in antichains(n):
            if gi:
                yield IdealPair(n, gi, ())
    elif shape == "thm110":
        quads = [m for m in _masks_of_degree(n, 2, 2) if not m & 1]
        for size in range(1, len(quads) + 1):
            for E in combinations(quads, size):
                gi = minimalize((1,) + E)
                ci = _closure(gi, n)
                pool = tuple(m for m in sorted(range(1 << n), key=canonical_key)
                             if degree(m) >= 2 and (ci >> m) & 1)
                for gj in antichains(n, pool):
                    yield IdealPair(n, gi, gj)
    else:
        raise InfeasibleConfig(f"unknown enumeration shape {shape!r}")
