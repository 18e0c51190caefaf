"""Stanley depth of I/J via interval partitions of the poset P = I \\ J.

``sdepth_at_least`` decides sdepth >= k as an exact-cover problem: every
element of degree < k must sit in an interval whose top has degree exactly k,
intervals pairwise disjoint. Elements left over have degree >= k and become
singletons. Any partition with all tops of degree >= k can be refined into
this form (split [u, v] into [u, v - x_j] and [u + x_j, v] repeatedly), so
nothing is lost by fixing the top degree.

``naive_sdepth`` enumerates all interval partitions instead, and serves as
the independent check on the normalized search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Monomial, Poset, ZeroModuleError, canonical_key, degree, format_monomial, submasks


@dataclass(frozen=True, order=True)
class Interval:
    bottom: Monomial
    top: Monomial

    def span(self) -> list[Monomial]:
        return sorted((self.bottom | s for s in submasks(self.top & ~self.bottom)), key=canonical_key)

    def span_bits(self) -> int:
        bits = 0
        for s in submasks(self.top & ~self.bottom):
            bits |= 1 << (self.bottom | s)
        return bits

    def __str__(self) -> str:
        return f"[{format_monomial(self.bottom)}, {format_monomial(self.top)}]"


@dataclass(frozen=True)
class PartitionCertificate:
    intervals: tuple[Interval, ...]
    claimed_sdepth: int

    def interval_of(self, m: Monomial) -> Optional[Interval]:
        for iv in self.intervals:
            if iv.bottom & ~m == 0 and m & ~iv.top == 0:
                return iv
        return None


def _require_nonempty(poset: Poset) -> None:
    if len(poset) == 0:
        raise ZeroModuleError("empty poset")


def sdepth_at_least(poset: Poset, k: int) -> Optional[PartitionCertificate]:
    """A partition certificate with sdepth >= k, or ``None`` if none exists.

    Deterministic: the search branches on the first uncovered element in
    (degree, mask) order and tries tops in the same order, so the returned
    certificate is the canonically first one.
    """
    _require_nonempty(poset)
    low = [u for u in poset.elements if degree(u) < k]
    if not low:
        return _with_singletons(poset, [])
    if k > poset.n:
        return None

    candidates: dict[Monomial, list[tuple[Monomial, int]]] = {}
    for u in low:
        options = []
        for v in poset.elements:
            if degree(v) == k and u & ~v == 0:
                options.append((v, Interval(u, v).span_bits()))
        if not options:
            return None
        candidates[u] = options

    dead: set[int] = set()
    chosen: list[Interval] = []

    def search(used: int, start: int) -> bool:
        i = start
        while i < len(low) and (used >> low[i]) & 1:
            i += 1
        if i == len(low):
            return True
        if used in dead:
            return False
        u = low[i]
        for v, span in candidates[u]:
            if span & used:
                continue
            chosen.append(Interval(u, v))
            if search(used | span, i + 1):
                return True
            chosen.pop()
        dead.add(used)
        return False

    if not search(0, 0):
        return None
    return _with_singletons(poset, chosen)


def _with_singletons(poset: Poset, chosen: list[Interval]) -> PartitionCertificate:
    covered = 0
    for iv in chosen:
        covered |= iv.span_bits()
    intervals = list(chosen)
    intervals += [Interval(w, w) for w in poset.elements if not (covered >> w) & 1]
    intervals.sort(key=lambda iv: (canonical_key(iv.bottom), canonical_key(iv.top)))
    claimed = min(degree(iv.top) for iv in intervals)
    return PartitionCertificate(tuple(intervals), claimed)


def sdepth(poset: Poset) -> tuple[int, PartitionCertificate]:
    """Exact Stanley depth by binary search over k, with a witness partition."""
    _require_nonempty(poset)
    lo = poset.min_degree
    best = sdepth_at_least(poset, lo)
    assert best is not None
    hi = max(degree(m) for m in poset.elements)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        cert = sdepth_at_least(poset, mid)
        if cert is None:
            hi = mid - 1
        else:
            lo, best = mid, cert
    if best.claimed_sdepth > lo:
        # all-singleton certificates can already exceed the tested k
        lo = best.claimed_sdepth
    return lo, best


def partition_defect(poset: Poset, cert: PartitionCertificate) -> Optional[str]:
    """Why ``cert`` is not a valid partition of ``poset``; ``None`` if it is."""
    covered = 0
    for iv in cert.intervals:
        if iv.bottom & ~iv.top:
            return f"{iv}: bottom does not divide top"
        if iv.bottom not in poset or iv.top not in poset:
            return f"{iv}: endpoint outside the poset"
        span = iv.span_bits()
        if span & ~poset.bits:
            return f"{iv}: span leaves the poset"
        if span & covered:
            overlap = [format_monomial(m) for m in iv.span() if (covered >> m) & 1]
            return f"{iv}: overlaps earlier intervals at {', '.join(overlap)}"
        covered |= span
    if covered != poset.bits:
        missing = [format_monomial(m) for m in poset.elements if not (covered >> m) & 1]
        return f"elements not covered: {', '.join(missing)}"
    if not cert.intervals:
        return "no intervals"
    actual = min(degree(iv.top) for iv in cert.intervals)
    if actual != cert.claimed_sdepth:
        return f"claimed sdepth {cert.claimed_sdepth} but minimum top degree is {actual}"
    return None


def verify_partition(poset: Poset, cert: PartitionCertificate) -> bool:
    return partition_defect(poset, cert) is None


NAIVE_LIMIT = 14


def naive_sdepth(poset: Poset, limit: int = NAIVE_LIMIT) -> int:
    """Max over all interval partitions of the minimum top degree.

    Exhaustive: the first uncovered element (in canonical order) must be the
    bottom of its interval, and every admissible top is tried. Results are
    memoized on the set of still-uncovered elements.
    """
    _require_nonempty(poset)
    size = len(poset)
    if size > limit:
        raise ValueError(f"poset too large for enumeration ({size} > {limit})")
    elems = poset.elements
    index = {m: i for i, m in enumerate(elems)}
    options: list[list[tuple[int, int]]] = []
    for w in elems:
        opts = []
        for v in elems:
            if w & ~v == 0:
                span = 0
                for s in submasks(v & ~w):
                    span |= 1 << index[w | s]
                opts.append((degree(v), span))
        options.append(opts)

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        if remaining == 0:
            return poset.n + 1
        first = (remaining & -remaining).bit_length() - 1
        value = -1
        for top_degree, span in options[first]:
            if span & ~remaining:
                continue
            if top_degree <= value:
                continue
            value = max(value, min(top_degree, best(remaining & ~span)))
        return value

    return best((1 << size) - 1)
