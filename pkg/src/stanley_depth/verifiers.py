"""Implication checks for the depth / Stanley depth claims on concrete pairs.

Each checker evaluates a hypothesis and a conclusion on one ideal pair and
returns an :class:`ImplicationReport`. A false hypothesis makes the report
``vacuous``; a true hypothesis with a false conclusion is a ``VIOLATION``.

Shapes such as "I is generated by x1 and degree-2 monomials" are detected up
to relabeling of the variables: the variable generators are located rather
than assumed to be x1..xr.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .core import (
    IdealPair,
    Monomial,
    ZeroModuleError,
    build_poset,
    degree,
    degree_stats,
    format_monomial,
    member,
    minimalize,
    single_variable_shape,
    var,
    variables,
)
from .koszul import RATIONALS, FieldSpec, depth_value
from .sdepth import Interval, PartitionCertificate, sdepth, sdepth_at_least

CONFIRMED = "confirmed"
VACUOUS = "vacuous"
VIOLATION = "VIOLATION"

CLAIMS = (
    "INTRO-BOUNDS",
    "INTRO-LOWER",
    "L1.1",
    "P1.3",
    "L1.5",
    "L1.6",
    "L1.7",
    "L1.8",
    "P1.9",
    "T1.10",
    "SD1-D1",
    "STANLEY-N5",
    "DEPTH-LEMMA",
)


@dataclass
class ImplicationReport:
    claim_id: str
    hypothesis_holds: bool
    conclusion_holds: bool
    witness: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not self.hypothesis_holds:
            return VACUOUS
        return CONFIRMED if self.conclusion_holds else VIOLATION

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "verdict": self.verdict,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ImplicationReport":
        report = cls(data["claim_id"], data["hypothesis_holds"], data["conclusion_holds"], data["witness"])
        if report.verdict != data["verdict"]:
            raise ValueError(f"inconsistent verdict in {data}")
        return report


def _fmt(ms: Iterable[Monomial]) -> list[str]:
    return [format_monomial(m) for m in ms]


@lru_cache(maxsize=1 << 14)
def cached_sdepth(ip: IdealPair) -> tuple[int, PartitionCertificate]:
    return sdepth(build_poset(ip))


def sdepth_value(ip: IdealPair) -> int:
    return cached_sdepth(ip)[0]


def intersect(a: Iterable[Monomial], b: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of the intersection of two square-free monomial ideals."""
    b = list(b)
    return minimalize(g | h for g in a for h in b)


def _j_above(ip: IdealPair, d: int) -> bool:
    return all(degree(g) >= d + 1 for g in ip.gens_j)


def _base_witness(ip: IdealPair) -> dict:
    return {"instance": ip.to_text()}


def _report(claim: str, ip: IdealPair, hyp: bool, concl: bool, **extra) -> ImplicationReport:
    witness = _base_witness(ip)
    witness.update(extra)
    return ImplicationReport(claim, bool(hyp), bool(concl), witness)


# --- degree statistics ------------------------------------------------------

def check_intro_bounds(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """s > r + q, r > q or s < 2r forces sdepth <= d + 1."""
    st = degree_stats(ip)
    d = st.d
    setting = _j_above(ip, d)
    clauses = {"s>r+q": st.s > st.r + st.q, "r>q": st.r > st.q, "s<2r": st.s < 2 * st.r}
    sd = sdepth_value(ip)
    return _report("INTRO-BOUNDS", ip, setting and any(clauses.values()), sd <= d + 1,
                   d=d, r=st.r, s=st.s, q=st.q, clauses=clauses, sdepth=sd,
                   setting=setting)


def check_intro_lower(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """I generated in degree >= d and J in degree >= d + 1 give depth >= d."""
    d = ip.d
    dp = depth_value(ip, field)
    return _report("INTRO-LOWER", ip, _j_above(ip, d), dp >= d, d=d, depth=dp)


# --- variable-generated I -----------------------------------------------------

def variable_block(ip: IdealPair) -> tuple[list[int], list[Monomial]]:
    """Indices of the variables among I's generators, and the other generators."""
    block = [variables(g)[0] for g in ip.gens_i if degree(g) == 1]
    others = [g for g in ip.gens_i if degree(g) != 1]
    return block, others


def check_lemma_1_1(ip: IdealPair, j: int, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """I = (x_i : i in R), |R| < n; depth I/(J + (x_j) cap B) = 1 for j outside R
    forces depth I/J <= 2."""
    if not 1 <= j <= ip.n:
        raise ValueError(f"variable index {j} out of range")
    block, others = variable_block(ip)
    reasons = []
    if others or not block:
        reasons.append("I is not generated by variables")
    if len(block) >= ip.n:
        reasons.append("I contains every variable")
    if not _j_above(ip, 1):
        reasons.append("J has a generator of degree < 2")
    if j in block:
        reasons.append(f"x{j} is a generator of I")
    aux_depth = None
    if not reasons:
        poset = build_poset(ip)
        killed = [b for b in poset.of_degree(2) if b & var(j)]
        aux = ip.with_gens(gens_j=list(ip.gens_j) + killed)
        if aux.is_zero():
            reasons.append("auxiliary module is zero")
        else:
            aux_depth = depth_value(aux, field)
    dp = depth_value(ip, field)
    hyp = not reasons and aux_depth == 1
    return _report("L1.1", ip, hyp, dp <= 2, j=j, generator_variables=block,
                   aux_depth=aux_depth, depth=dp, shape_issues=reasons)


def check_prop_1_3(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """I = (x_i : i in R) + (gens of degree >= 2) and x_i x_t x_k in J for all
    i in R, t < k outside R, forces depth I/J <= 2."""
    block, others = variable_block(ip)
    shape = bool(block) and 0 not in ip.gens_i and _j_above(ip, 1)
    free = [t for t in range(1, ip.n + 1) if t not in block]
    missing = []
    if shape:
        for i in block:
            for t, k in combinations(free, 2):
                m = var(i) | var(t) | var(k)
                if not ip.member_j(m):
                    missing.append(m)
    dp = depth_value(ip, field)
    return _report("P1.3", ip, shape and not missing, dp <= 2, generator_variables=block,
                   shape=shape, triples_outside_j=_fmt(missing[:5]), depth=dp)


# --- isolated monomials -----------------------------------------------------

def find_isolated_monomials(ip: IdealPair) -> list[tuple[Monomial, int]]:
    """Elements u of P whose multiples of degree deg(u) + 1 all lie in J."""
    poset = build_poset(ip)
    full = (1 << ip.n) - 1
    out = []
    for u in poset.elements:
        rest = full & ~u
        if all((u | (1 << b)) not in poset for b in range(ip.n) if rest >> b & 1):
            out.append((u, degree(u)))
    return out


def check_lemma_1_5(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    isolated = find_isolated_monomials(ip)
    dp = depth_value(ip, field)
    bound = min((k for _, k in isolated), default=None)
    return _report("L1.5", ip, bool(isolated), bound is None or dp <= bound,
                   isolated=[[format_monomial(u), k] for u, k in isolated], bound=bound, depth=dp)


# --- adding generators of high degree ---------------------------------------

def check_lemma_1_6(ip: IdealPair, extra: Iterable[Monomial], field: FieldSpec = RATIONALS) -> ImplicationReport:
    """V of degree >= d + 2 outside I: (I+V)/J and I/J agree on "<= d + 1".

    Checked: sdepth (I+V)/J <= d+1 implies sdepth I/J <= d+1, and
    depth (I+V)/J <= d+1 if and only if depth I/J <= d+1.
    """
    extra = minimalize(extra)
    d = ip.d
    for v in extra:
        if degree(v) < d + 2:
            raise ValueError(f"{format_monomial(v)} has degree below d + 2 = {d + 2}")
        if ip.member_i(v):
            raise ValueError(f"{format_monomial(v)} already lies in I")
    setting = _j_above(ip, d)
    big = ip.with_gens(gens_i=list(ip.gens_i) + list(extra))
    sd_small, sd_big = sdepth_value(ip), sdepth_value(big)
    dp_small, dp_big = depth_value(ip, field), depth_value(big, field)
    bound = d + 1
    sd_ok = not (sd_big <= bound) or sd_small <= bound
    dp_ok = (dp_big <= bound) == (dp_small <= bound)
    return _report("L1.6", ip, setting, sd_ok and dp_ok, V=_fmt(extra), d=d,
                   sdepth=sd_small, sdepth_with_v=sd_big, depth=dp_small, depth_with_v=dp_big)


def lemma_1_6_candidates(ip: IdealPair) -> list[Monomial]:
    d = ip.d
    return [m for m in range(1 << ip.n) if degree(m) >= d + 2 and not ip.member_i(m)]


# --- I = (x1) + (E) ---------------------------------------------------------

@dataclass(frozen=True)
class ShapeData:
    pivot: int
    E: tuple[Monomial, ...]
    E1: tuple[Monomial, ...]
    E2: tuple[Monomial, ...]
    B: tuple[Monomial, ...]
    C: tuple[Monomial, ...]
    c_outside: tuple[Monomial, ...]
    sdepth: int
    depth: int
    quadrics_condition: bool
    pivot_multiples_survive: bool

    @property
    def condition1(self) -> bool:
        return len(self.E2) <= len(self.c_outside)

    @property
    def condition2(self) -> bool:
        return len(self.E2) > len(self.c_outside) and len(self.B) != len(self.C) + 1

    @property
    def boundary(self) -> bool:
        """sdepth 2 but neither condition: the case the theorem leaves open."""
        return self.sdepth == 2 and not self.condition1 and not self.condition2

    def witness(self) -> dict:
        return {
            "pivot": self.pivot,
            "E": _fmt(self.E),
            "E1": _fmt(self.E1),
            "E2": _fmt(self.E2),
            "B_size": len(self.B),
            "C_size": len(self.C),
            "C_outside_size": len(self.c_outside),
            "condition1": self.condition1,
            "condition2": self.condition2,
            "sdepth": self.sdepth,
            "depth": self.depth,
            "quadrics_condition": self.quadrics_condition,
        }


def shape_data(ip: IdealPair, field: FieldSpec = RATIONALS) -> Optional[ShapeData]:
    """Degree data for I = (x_v) + (E), J generated in degree >= 2; else ``None``."""
    shape = single_variable_shape(ip)
    if shape is None or not _j_above(ip, 1):
        return None
    st = degree_stats(ip, 1)
    x = var(st.pivot)
    ideal = (x,) + st.e1
    c_outside = tuple(c for c in st.C if not member(c, ideal))
    quadrics = all(ip.member_j(u | x) for u in range(1 << ip.n)
                   if degree(u) == 2 and not ip.member_i(u))
    survive = all(not ip.member_j(a | x) for a in st.e)
    return ShapeData(st.pivot, st.e, st.e1, st.e2, st.B, st.C, c_outside,
                     sdepth_value(ip), depth_value(ip, field), quadrics, survive)


def check_thm_1_10(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    data = shape_data(ip, field)
    if data is None:
        return _report("T1.10", ip, False, True, shape=False)
    hyp = data.sdepth == 2 and (data.condition1 or data.condition2)
    return _report("T1.10", ip, hyp, data.depth <= 2, shape=True, **data.witness())


def check_prop_1_9(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    data = shape_data(ip, field)
    if data is None:
        return _report("P1.9", ip, False, True, shape=False)
    hyp = data.sdepth == 2 and data.quadrics_condition and (data.condition1 or data.condition2)
    return _report("P1.9", ip, hyp, data.depth <= 2, shape=True, **data.witness())


def check_lemma_1_8(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    data = shape_data(ip, field)
    if data is None:
        return _report("L1.8", ip, False, True, shape=False)
    hyp = data.sdepth == 2 and data.quadrics_condition and data.pivot_multiples_survive
    return _report("L1.8", ip, hyp, data.depth <= 2, shape=True, **data.witness())


def lemma_1_7_failures(ip: IdealPair, t: int, cert: PartitionCertificate, pivot: int) -> list[str]:
    """Conclusions (1) and (2) of the interval lemma, checked on one certificate
    of the submodule generated by B minus x1*x_t."""
    x1, xt = var(pivot), var(t)
    poset = build_poset(ip)
    B = set(poset.of_degree(2))
    failures = []
    for a in sorted(B):
        if a & xt and not a & x1 and not ip.member_j(a | x1):
            found = cert.interval_of(a)
            if found != Interval(a, a | x1):
                failures.append(f"(1): {format_monomial(a)} lies in {found}, not [a, x1*a]")
    others = [i for i in range(1, ip.n + 1) if i not in (pivot, t)]
    for i, j in combinations(others, 2):
        c = xt | var(i) | var(j)
        if not ip.member_i(c) or ip.member_j(c):
            continue
        if ip.member_j(x1 | xt | var(i)) or ip.member_j(x1 | xt | var(j)):
            continue
        b = var(i) | var(j)
        if b not in B:
            failures.append(f"(2): {format_monomial(b)} not in B")
            continue
        if not ip.member_j(b | x1):
            found = cert.interval_of(c)
            if found is not None and found.top == c and degree(found.bottom) == 2:
                failures.append(f"(2): {format_monomial(c)} is the top of {found}")
    return failures


def check_lemma_1_7(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """Spot-check the interval lemma on solver certificates, for every t with
    x1*x_t in B whose submodule admits a partition of Stanley depth 3."""
    data = shape_data(ip, field)
    if data is None:
        return _report("L1.7", ip, False, True, shape=False)
    checked: list[int] = []
    failures: list[str] = []
    if data.sdepth == 2 and data.quadrics_condition:
        x1 = var(data.pivot)
        for t in range(1, ip.n + 1):
            if t == data.pivot or (x1 | var(t)) not in data.B:
                continue
            gens = [b for b in data.B if b != x1 | var(t)]
            if not gens:
                continue
            sub = IdealPair.make(ip.n, gens, intersect(gens, ip.gens_j))
            if sub.is_zero():
                continue
            cert = sdepth_at_least(build_poset(sub), 3)
            if cert is None:
                continue
            checked.append(t)
            failures += [f"t={t} {f}" for f in lemma_1_7_failures(ip, t, cert, data.pivot)]
    return _report("L1.7", ip, bool(checked), not failures, shape=True, checked_t=checked,
                   failures=failures[:5], sdepth=data.sdepth)


# --- unconditional statements ------------------------------------------------

def check_sdepth1_depth1(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    sd = sdepth_value(ip)
    dp = depth_value(ip, field)
    return _report("SD1-D1", ip, sd <= 1, dp <= 1, sdepth=sd, depth=dp)


def check_stanley(ip: IdealPair, field: FieldSpec = RATIONALS) -> ImplicationReport:
    """sdepth >= depth, asserted only for J = 0 and n <= 5; logged otherwise."""
    sd = sdepth_value(ip)
    dp = depth_value(ip, field)
    in_scope = not ip.gens_j and ip.n <= 5
    return _report("STANLEY-N5", ip, in_scope, sd >= dp, sdepth=sd, depth=dp,
                   inequality_holds=sd >= dp)


def check_depth_lemma(ip: IdealPair, sub_gens: Iterable[Monomial], field: FieldSpec = RATIONALS) -> ImplicationReport:
    """Depth inequalities for 0 -> I'/(I' cap J) -> I/J -> I/(I' + J) -> 0."""
    sub = minimalize(sub_gens)
    for g in sub:
        if not ip.member_i(g):
            raise ValueError(f"{format_monomial(g)} is not in I")
    first = IdealPair.make(ip.n, sub, intersect(sub, ip.gens_j))
    last = IdealPair.make(ip.n, ip.gens_i, list(sub) + list(ip.gens_j))
    for name, mod in (("I'/(I' cap J)", first), ("I/J", ip), ("I/(I' + J)", last)):
        if mod.is_zero():
            raise ZeroModuleError(f"{name} is zero")
    a, b, c = depth_value(first, field), depth_value(ip, field), depth_value(last, field)
    checks = {
        "A>=min(B,C+1)": a >= min(b, c + 1),
        "B>=min(A,C)": b >= min(a, c),
        "C>=min(A-1,B)": c >= min(a - 1, b),
    }
    return _report("DEPTH-LEMMA", ip, True, all(checks.values()), sub_ideal=_fmt(sub),
                   depths=[a, b, c], inequalities=checks)


def depth_lemma_splits(ip: IdealPair) -> list[tuple[Monomial, ...]]:
    """Subideals I' whose short exact sequence has three nonzero terms."""
    out = []
    block = tuple(g for g in ip.gens_i if degree(g) == 1)
    candidates = [(g,) for g in ip.gens_i]
    if len(block) > 1 and len(block) < len(ip.gens_i):
        candidates.append(block)
    for sub in candidates:
        first_zero = all(member(g, ip.gens_j) for g in sub)
        last = IdealPair.make(ip.n, ip.gens_i, list(sub) + list(ip.gens_j))
        if not first_zero and not last.is_zero():
            out.append(sub)
    return out


# --- driver -------------------------------------------------------------------

def _pick(ip: IdealPair, options: list, count: int, salt: str) -> list:
    """A deterministic, instance-dependent sample of ``count`` options."""
    if len(options) <= count:
        return list(options)
    rng = random.Random(zlib.crc32((salt + ip.to_text()).encode()))
    return rng.sample(options, count)


def run_claims(ip: IdealPair, claims: Optional[Iterable[str]] = None,
               field: FieldSpec = RATIONALS, exhaustive: bool = False) -> list[ImplicationReport]:
    """Every applicable check on one pair.

    Parametrized claims (L1.1 over j, L1.6 over V, DEPTH-LEMMA over I') use all
    parameters when ``exhaustive`` is set and a deterministic sample otherwise.
    """
    wanted = list(CLAIMS if claims is None else claims)
    unknown = set(wanted) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    if ip.is_zero():
        raise ZeroModuleError("zero module")
    out: list[ImplicationReport] = []
    for claim in wanted:
        if claim == "INTRO-BOUNDS":
            out.append(check_intro_bounds(ip, field))
        elif claim == "INTRO-LOWER":
            out.append(check_intro_lower(ip, field))
        elif claim == "L1.1":
            block, _ = variable_block(ip)
            js = [j for j in range(1, ip.n + 1) if j not in block]
            # a single vacuous report when no admissible j exists
            for j in js or [1]:
                out.append(check_lemma_1_1(ip, j, field))
        elif claim == "P1.3":
            out.append(check_prop_1_3(ip, field))
        elif claim == "L1.5":
            out.append(check_lemma_1_5(ip, field))
        elif claim == "L1.6":
            singles = lemma_1_6_candidates(ip) if _j_above(ip, ip.d) else []
            choices = [(v,) for v in singles]
            if not exhaustive:
                choices = _pick(ip, choices, 1, "V")
                if len(singles) >= 2:
                    choices += [tuple(_pick(ip, singles, 2, "VV"))]
            for extra in choices or [()]:
                out.append(check_lemma_1_6(ip, extra, field))
        elif claim == "L1.7":
            out.append(check_lemma_1_7(ip, field))
        elif claim == "L1.8":
            out.append(check_lemma_1_8(ip, field))
        elif claim == "P1.9":
            out.append(check_prop_1_9(ip, field))
        elif claim == "T1.10":
            out.append(check_thm_1_10(ip, field))
        elif claim == "SD1-D1":
            out.append(check_sdepth1_depth1(ip, field))
        elif claim == "STANLEY-N5":
            out.append(check_stanley(ip, field))
        elif claim == "DEPTH-LEMMA":
            splits = depth_lemma_splits(ip)
            if not exhaustive:
                splits = _pick(ip, splits, 2, "S")
            if not splits:
                out.append(_report("DEPTH-LEMMA", ip, False, True, sub_ideal=None))
            for sub in splits:
                out.append(check_depth_lemma(ip, sub, field))
    return out
