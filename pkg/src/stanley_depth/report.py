"""The structured report emitted by every CLI invocation, and its text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Optional

from .core import IdealPair, build_poset, degree_stats, format_monomial, parse_monomial
from .koszul import RATIONALS, FieldSpec, depth
from .sdepth import Interval, PartitionCertificate, verify_partition
from .verifiers import cached_sdepth, run_claims


@dataclass
class Report:
    command: str
    instance: Optional[str] = None
    field: Optional[str] = None
    n: Optional[int] = None
    d: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    q: Optional[int] = None
    B: Optional[list[str]] = None
    C: Optional[list[str]] = None
    E: Optional[list[str]] = None
    E1: Optional[list[str]] = None
    E2: Optional[list[str]] = None
    depth: Optional[int] = None
    sdepth: Optional[int] = None
    at_least: Optional[int] = None
    holds: Optional[bool] = None
    claimed_sdepth: Optional[int] = None
    certificate: Optional[list[dict[str, str]]] = None
    certificate_verified: Optional[bool] = None
    profile: Optional[list[dict[str, Any]]] = None
    claims: Optional[list[dict[str, Any]]] = None
    summary: Optional[dict[str, Any]] = None
    corpus: Optional[list[dict[str, Any]]] = None
    timing: Optional[float] = None

    def to_dict(self, with_timing: bool = True) -> dict[str, Any]:
        out = {k: v for k, v in asdict(self).items() if v is not None}
        if not with_timing:
            out.pop("timing", None)
        return out

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown report fields: {sorted(extra)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        lines = [f"# {self.command}"]
        if self.instance:
            lines.append(self.instance.strip())
        elif self.n is not None:
            lines.append(f"n = {self.n}")
        for key in ("field", "d", "r", "s", "q", "depth", "sdepth", "at_least", "holds", "claimed_sdepth"):
            value = getattr(self, key)
            if value is not None:
                lines.append(f"{key} = {value}")
        for key in ("B", "C", "E", "E1", "E2"):
            value = getattr(self, key)
            if value is not None:
                lines.append(f"{key} = {{{', '.join(value)}}}")
        if self.certificate is not None:
            verified = "verified" if self.certificate_verified else "NOT verified"
            lines.append(f"certificate ({verified}):")
            lines += [f"  [{iv['bottom']}, {iv['top']}]" for iv in self.certificate]
        if self.profile is not None:
            lines.append("nonzero Koszul homology:")
            lines += [f"  H_{row['p']} at {row['multidegree']}: rank {row['rank']}" for row in self.profile]
        for claim in self.claims or []:
            lines.append(f"{claim['claim_id']}: {claim['verdict']}")
        if self.summary is not None:
            lines.append(f"instances: {self.summary['instances']}")
            for claim, counts in self.summary["counts"].items():
                parts = ", ".join(f"{v} {k}" for k, v in counts.items())
                lines.append(f"  {claim}: {parts}")
            lines.append(f"boundary cases: {self.summary['boundary_cases']}")
        for entry in self.corpus or []:
            lines.append(f"{entry['file']}: {'ok' if entry['ok'] else 'MISMATCH'}")
        if self.timing is not None:
            lines.append(f"time: {self.timing:.3f}s")
        return "\n".join(lines)


def certificate_rows(cert: PartitionCertificate) -> list[dict[str, str]]:
    return [{"bottom": format_monomial(iv.bottom), "top": format_monomial(iv.top)} for iv in cert.intervals]


def certificate_from_rows(rows: list[dict[str, str]], claimed: int, n: int) -> PartitionCertificate:
    intervals = tuple(Interval(parse_monomial(r["bottom"], n), parse_monomial(r["top"], n)) for r in rows)
    return PartitionCertificate(intervals, claimed)


def fill_stats(report: Report, ip: IdealPair, d: Optional[int] = None) -> None:
    st = degree_stats(ip, d)
    report.n = ip.n
    report.d, report.r, report.s, report.q = st.d, st.r, st.s, st.q
    report.B = [format_monomial(m) for m in st.B]
    report.C = [format_monomial(m) for m in st.C]
    if st.e is not None:
        report.E = [format_monomial(m) for m in st.e]
        report.E1 = [format_monomial(m) for m in st.e1 or ()]
        report.E2 = [format_monomial(m) for m in st.e2 or ()]


def fill_sdepth(report: Report, ip: IdealPair) -> None:
    value, cert = cached_sdepth(ip)
    report.sdepth = value
    report.claimed_sdepth = cert.claimed_sdepth
    report.certificate = certificate_rows(cert)
    report.certificate_verified = verify_partition(build_poset(ip), cert)


def full_report(ip: IdealPair, field: FieldSpec = RATIONALS) -> Report:
    """Everything computed for one instance; used for stored corpus expectations."""
    report = Report("corpus", instance=ip.to_text(), field=str(field))
    fill_stats(report, ip)
    fill_sdepth(report, ip)
    value, profile = depth(ip, field)
    report.depth = value
    report.profile = profile.rows()
    report.claims = [rep.to_dict() for rep in run_claims(ip, field=field, exhaustive=True)]
    return report
