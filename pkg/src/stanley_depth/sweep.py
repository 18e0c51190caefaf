"""Run claim checks over instance streams and aggregate the verdicts."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .core import IdealPair
from .koszul import RATIONALS, FieldSpec
from .verifiers import CLAIMS, VIOLATION, ImplicationReport, run_claims, shape_data

WORKERS_ENV = "STANLEY_DEPTH_WORKERS"
CHUNK = 200


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class SweepSummary:
    instances: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    boundary: list[str] = field(default_factory=list)
    stanley_failures: list[str] = field(default_factory=list)

    def add(self, reports: list[ImplicationReport], boundary: bool, ip_text: str) -> None:
        self.instances += 1
        for rep in reports:
            self.counts.setdefault(rep.claim_id, Counter())[rep.verdict] += 1
            if rep.verdict == VIOLATION:
                self.violations.append(rep.to_dict())
            if rep.claim_id == "STANLEY-N5" and not rep.witness["inequality_holds"]:
                self.stanley_failures.append(ip_text)
        if boundary:
            self.boundary.append(ip_text)

    def merge(self, other: "SweepSummary") -> None:
        self.instances += other.instances
        for claim, counter in other.counts.items():
            self.counts.setdefault(claim, Counter()).update(counter)
        self.violations += other.violations
        self.boundary += other.boundary
        self.stanley_failures += other.stanley_failures

    def violation_count(self, claim: Optional[str] = None) -> int:
        if claim is None:
            return sum(c[VIOLATION] for c in self.counts.values())
        return self.counts.get(claim, Counter())[VIOLATION]

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "counts": {k: dict(sorted(v.items())) for k, v in sorted(self.counts.items())},
            "violations": self.violations,
            "boundary_cases": len(self.boundary),
            "stanley_general_failures": len(self.stanley_failures),
        }


def _check_chunk(args: tuple[list[IdealPair], tuple[str, ...], FieldSpec]) -> SweepSummary:
    chunk, claims, fld = args
    summary = SweepSummary()
    for ip in chunk:
        reports = run_claims(ip, claims, fld)
        data = shape_data(ip, fld)
        summary.add(reports, data is not None and data.boundary, ip.to_text())
    return summary


def _chunks(items: Iterable[IdealPair], size: int) -> Iterator[list[IdealPair]]:
    it = iter(items)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def sweep(instances: Iterable[IdealPair], claims: Optional[Iterable[str]] = None,
          field: FieldSpec = RATIONALS, workers: Optional[int] = None) -> SweepSummary:
    """Check ``claims`` on every instance; the result does not depend on ``workers``."""
    claims = tuple(CLAIMS if claims is None else claims)
    workers = worker_count() if workers is None else workers
    total = SweepSummary()
    jobs = ((chunk, claims, field) for chunk in _chunks(instances, CHUNK))
    if workers <= 1:
        for job in jobs:
            total.merge(_check_chunk(job))
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_check_chunk, jobs):
            total.merge(part)
    return total


def write_corpus(directory: Path, texts: Iterable[str], prefix: str) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, text in enumerate(texts):
        path = directory / f"{prefix}_{i:04d}.ideal"
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths
