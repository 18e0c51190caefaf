"""Command-line front end.

Exit status: 0 on success / confirmed, 1 when a claim violation is found (or a
corpus expectation does not match), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .core import InstanceError, IdealPair, ZeroModuleError, build_poset, parse_ideal_pair, parse_monomial
from .generate import SHAPES, InfeasibleConfig, InstanceGenConfig, enumerate_all, generate_instances
from .koszul import FieldSpec, depth
from .report import Report, certificate_rows, fill_sdepth, fill_stats, full_report
from .sdepth import sdepth_at_least, verify_partition
from .sweep import sweep, write_corpus
from .verifiers import (
    CLAIMS,
    VIOLATION,
    check_depth_lemma,
    check_lemma_1_1,
    check_lemma_1_6,
    run_claims,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # let main() choose the exit status
        raise UsageError(message)


def _claim_list(value: str) -> list[str]:
    if value == "all":
        return list(CLAIMS)
    ids = [v.strip() for v in value.split(",") if v.strip()]
    bad = [v for v in ids if v not in CLAIMS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown claim id(s) {bad}; choose from {', '.join(CLAIMS)}")
    return ids


def _field(value: str) -> FieldSpec:
    try:
        return FieldSpec.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--text", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")
    parser = _Parser(prog="stanley-depth", description="Depth and Stanley depth of I/J for square-free monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name: str, **kwargs) -> argparse.ArgumentParser:
        return _add(name, parents=[common], **kwargs)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    p = sub.add_parser("stats", help="degree statistics d, r, s, q, B, C (and E, E', E'')")
    p.add_argument("file", type=Path)
    p.add_argument("--d", type=int, default=None, help="override the base degree d")

    p = sub.add_parser("sdepth", help="Stanley depth with an interval-partition certificate")
    p.add_argument("file", type=Path)
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--at-least", type=int, default=None, metavar="K", help="only decide sdepth >= K")

    p = sub.add_parser("depth", help="depth from Koszul homology")
    p.add_argument("file", type=Path)
    p.add_argument("--field", type=_field, default=FieldSpec(0), help="q (default) or fp:P")
    p.add_argument("--profile", action="store_true", help="list nonzero homology ranks")

    p = sub.add_parser("check", help="evaluate claims on one instance")
    p.add_argument("file", type=Path)
    p.add_argument("--claim", type=_claim_list, default=list(CLAIMS), help="claim id, comma list, or 'all'")
    p.add_argument("--field", type=_field, default=FieldSpec(0))
    p.add_argument("--j", type=int, default=None, help="variable index for L1.1")
    p.add_argument("--v", default=None, help="comma-separated monomials V for L1.6")
    p.add_argument("--sub", default=None, help="comma-separated generators of I' for DEPTH-LEMMA")

    p = sub.add_parser("fuzz", help="seeded random sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--shape", choices=SHAPES, default="general")
    p.add_argument("--claim", type=_claim_list, default=list(CLAIMS))
    p.add_argument("--field", type=_field, default=FieldSpec(0))
    p.add_argument("--corpus-out", type=Path, default=None, help="write boundary and violating instances here")

    p = sub.add_parser("enumerate", help="exhaustive sweep over all pairs on n variables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", choices=("thm110", "stanley"), default=None)
    p.add_argument("--claim", type=_claim_list, default=list(CLAIMS))
    p.add_argument("--field", type=_field, default=FieldSpec(0))
    p.add_argument("--corpus-out", type=Path, default=None)

    p = sub.add_parser("corpus", help="replay stored instances against expected reports")
    p.add_argument("action", choices=("run", "bless"))
    p.add_argument("directory", type=Path)
    return parser


def _load(path: Path) -> IdealPair:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_ideal_pair(text)


def _monomials(text: str, n: int) -> list[int]:
    return [parse_monomial(tok, n) for tok in text.split(",") if tok.strip()]


def _expected_path(instance: Path) -> Path:
    return instance.with_suffix(".expected.json")


def _run(args: argparse.Namespace) -> tuple[Report, int]:
    cmd = args.command
    if cmd == "stats":
        ip = _load(args.file)
        report = Report("stats", instance=ip.to_text())
        fill_stats(report, ip, args.d)
        return report, EXIT_OK

    if cmd == "sdepth":
        ip = _load(args.file)
        report = Report("sdepth", instance=ip.to_text(), n=ip.n)
        if args.at_least is not None:
            poset = build_poset(ip)
            if not 0 <= args.at_least <= ip.n:
                raise UsageError(f"--at-least must lie in 0..{ip.n}")
            cert = sdepth_at_least(poset, args.at_least)
            report.at_least = args.at_least
            report.holds = cert is not None
            if cert is not None and args.certificate:
                report.claimed_sdepth = cert.claimed_sdepth
                report.certificate = certificate_rows(cert)
                report.certificate_verified = verify_partition(poset, cert)
            return report, EXIT_OK
        fill_sdepth(report, ip)
        if not args.certificate:
            report.certificate = report.certificate_verified = None
        return report, EXIT_OK

    if cmd == "depth":
        ip = _load(args.file)
        value, profile = depth(ip, args.field)
        report = Report("depth", instance=ip.to_text(), field=str(args.field), n=ip.n, depth=value)
        if args.profile:
            report.profile = profile.rows()
        return report, EXIT_OK

    if cmd == "check":
        ip = _load(args.file)
        reports = []
        for claim in args.claim:
            if claim == "L1.1" and args.j is not None:
                reports.append(check_lemma_1_1(ip, args.j, args.field))
            elif claim == "L1.6" and args.v is not None:
                reports.append(check_lemma_1_6(ip, _monomials(args.v, ip.n), args.field))
            elif claim == "DEPTH-LEMMA" and args.sub is not None:
                reports.append(check_depth_lemma(ip, _monomials(args.sub, ip.n), args.field))
            else:
                reports += run_claims(ip, [claim], args.field, exhaustive=True)
        report = Report("check", instance=ip.to_text(), field=str(args.field), n=ip.n,
                        claims=[r.to_dict() for r in reports])
        bad = any(r.verdict == VIOLATION for r in reports)
        return report, EXIT_VIOLATION if bad else EXIT_OK

    if cmd in ("fuzz", "enumerate"):
        if cmd == "fuzz":
            cfg = InstanceGenConfig(n=args.n, seed=args.seed, shape=args.shape)
            cfg.validate()
            stream = generate_instances(cfg, args.trials)
        else:
            stream = enumerate_all(args.n, args.shape)
        summary = sweep(stream, args.claim, args.field)
        if args.corpus_out is not None:
            write_corpus(args.corpus_out, summary.boundary, "boundary")
            write_corpus(args.corpus_out, [v["witness"]["instance"] for v in summary.violations], "violation")
        report = Report(cmd, field=str(args.field), n=args.n, summary=summary.to_dict())
        return report, EXIT_VIOLATION if summary.violation_count() else EXIT_OK

    if cmd == "corpus":
        files = sorted(args.directory.glob("*.ideal"))
        if not files:
            raise UsageError(f"no .ideal files in {args.directory}")
        entries = []
        ok_all = True
        for path in files:
            ip = _load(path)
            actual = full_report(ip).to_dict(with_timing=False)
            expected_path = _expected_path(path)
            if args.action == "bless":
                expected_path.write_text(json.dumps(actual, indent=2) + "\n", encoding="utf-8")
                entries.append({"file": path.name, "ok": True})
                continue
            if not expected_path.exists():
                entries.append({"file": path.name, "ok": False, "reason": "missing expected report"})
                ok_all = False
                continue
            expected = json.loads(expected_path.read_text(encoding="utf-8"))
            expected.pop("timing", None)
            ok = expected == actual
            ok_all &= ok
            entry = {"file": path.name, "ok": ok}
            if not ok:
                entry["differs"] = sorted(k for k in set(expected) | set(actual) if expected.get(k) != actual.get(k))
            entries.append(entry)
        return Report("corpus", corpus=entries), EXIT_OK if ok_all else EXIT_VIOLATION

    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report, status = _run(args)
    except (UsageError, InstanceError, ZeroModuleError, InfeasibleConfig, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.no_timing:
        report.timing = round(time.perf_counter() - start, 6)
    print(report.render_text() if args.text else report.to_json(with_timing=not args.no_timing))
    return status


if __name__ == "__main__":
    sys.exit(main())
