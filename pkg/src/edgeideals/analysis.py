"""Embedded-prime onset analysis for square-free monomial ideals.

The pipeline certifies, power by power up to a bound, whether the associated
primes of I^t stay equal to the minimal primes of I (the normally torsion-free
pattern), detects the onset power where an embedded prime first appears, and
runs a family of cross-checks tying the onset to the matching number, to colon
stability, and to the packing and unmixedness of the underlying hypergraph.

Every check verifies its own preconditions computationally and reports "not
applicable" instead of passing vacuously; NTF is only ever reported as
"certified up to N" for the bound N that was actually scanned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .decomposition import (
    associated_primes,
    is_unmixed,
    minimal_primes,
    symbolic_power,
)
from .errors import BudgetError, UsageError
from .hypergraphs import (
    Hypergraph,
    MinorSpec,
    connected_components,
    cover_number,
    distinct_proper_minors,
    edge_ideal,
    hypergraph_of,
    isolated_vertices,
    konig,
    max_matching,
    packing,
)
from .monomials import Monomial, MonomialIdeal, MonomialPrime, maximal_prime

DEFAULT_MAX_POWER = 8
DEFAULT_MAX_MINORS = 200_000

BOUND_HALF_DIM = "half-dim"
BOUND_MINOR_MATCHING = "minor-matching"


def _require_squarefree_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero() or ideal.is_unit():
        raise UsageError("analysis needs a proper nonzero ideal")
    if not ideal.is_squarefree():
        raise UsageError("analysis needs a square-free ideal")


def matching_number(ideal: MonomialIdeal) -> tuple[int, tuple[Monomial, ...]]:
    """Largest set of generators with pairwise disjoint support, plus witness."""
    _require_squarefree_proper(ideal)
    size, edges = max_matching(hypergraph_of(ideal))
    witness = tuple(Monomial.from_support(ideal.ring_dim, _mask_bits(e)) for e in edges)
    return size, witness


def _mask_bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def default_bound(ideal: MonomialIdeal, rule: str = BOUND_HALF_DIM) -> int:
    """Power bound to scan: ceil((d+1)/2) on the effective vertex count.

    Effective vertices are those in edges of size at least two; isolated
    vertices never contribute to embedded primes.  The alternative rule
    maximizes the matching number over the hypergraph and all its minors
    and adds one.
    """
    _require_squarefree_proper(ideal)
    h = hypergraph_of(ideal)
    if rule == BOUND_HALF_DIM:
        support = 0
        for e in h.edges:
            if bin(e).count("1") >= 2:
                support |= e
        d_eff = bin(support).count("1")
        return max(1, math.ceil((d_eff + 1) / 2))
    if rule == BOUND_MINOR_MATCHING:
        best = max_matching(h)[0]
        for _, minor in distinct_proper_minors(h):
            best = max(best, max_matching(minor)[0])
        return best + 1
    raise UsageError(f"unknown bound rule: {rule}")


@dataclass
class PowerRow:
    """Associated-prime data for one power t."""

    t: int
    ass: tuple[MonomialPrime, ...]
    embedded: tuple[MonomialPrime, ...]
    symbolic_equal: bool


@dataclass
class NtfVerdict:
    """Per-power associated primes up to a bound, with the embedded-prime onset.

    ``onset`` is the least scanned power with an embedded prime, if any;
    ``certified_ntf_up_to`` is the last power known clean (the full bound when
    no onset appeared).  The verdict never claims anything beyond the bound.
    """

    bound_used: int
    per_power: tuple[PowerRow, ...]
    onset: int | None
    certified_ntf_up_to: int

    def row(self, t: int) -> PowerRow:
        return self.per_power[t - 1]


def ntf_verdict(
    ideal: MonomialIdeal, bound: int, max_power: int = DEFAULT_MAX_POWER
) -> NtfVerdict:
    """Scan powers 1..bound for embedded primes and symbolic-power equality."""
    _require_squarefree_proper(ideal)
    if bound < 1:
        raise UsageError(f"bound must be >= 1, got {bound}")
    minimal = set(minimal_primes(ideal))
    rows: list[PowerRow] = []
    onset: int | None = None
    power = ideal
    for t in range(1, bound + 1):
        if t > max_power:
            partial = NtfVerdict(
                bound_used=t - 1,
                per_power=tuple(rows),
                onset=onset,
                certified_ntf_up_to=(t - 1) if onset is None else onset - 1,
            )
            raise BudgetError(f"power {t} exceeds max_power={max_power}", partial=partial)
        if t > 1:
            power = power * ideal
        ass = associated_primes(power).primes
        embedded = tuple(p for p in ass if p not in minimal)
        rows.append(
            PowerRow(
                t=t,
                ass=ass,
                embedded=embedded,
                symbolic_equal=power == symbolic_power(ideal, t),
            )
        )
        if embedded and onset is None:
            onset = t
    return NtfVerdict(
        bound_used=bound,
        per_power=tuple(rows),
        onset=onset,
        certified_ntf_up_to=bound if onset is None else onset - 1,
    )


@dataclass
class MinorsCertification:
    """Outcome of scanning every distinct proper minor for embedded primes.

    Certification is bounded: each minor is scanned up to its own default
    bound (optionally capped), so ``all_ntf`` means "no embedded primes seen
    up to those bounds", never an unconditional claim.
    """

    all_ntf: bool
    failing_minor: MinorSpec | None
    minors_checked: int
    bound_cap: int | None = None


def all_proper_minors_ntf(
    ideal: MonomialIdeal,
    bound_cap: int | None = None,
    max_minors: int = DEFAULT_MAX_MINORS,
) -> MinorsCertification:
    """Run the NTF scan on every distinct proper minor of the ideal."""
    _require_squarefree_proper(ideal)
    h = hypergraph_of(ideal)
    if 3**h.n_vertices > max_minors:
        raise BudgetError(
            f"minor enumeration needs {3 ** h.n_vertices} specs, budget is {max_minors}"
        )
    checked = 0
    verdict_cache: dict[tuple[int, ...], int | None] = {}
    for spec, minor in distinct_proper_minors(h):
        checked += 1
        key = minor.canonical_form()
        if key in verdict_cache:
            onset = verdict_cache[key]
        else:
            minor_ideal = edge_ideal(minor)
            bound = default_bound(minor_ideal)
            if bound_cap is not None:
                bound = min(bound, bound_cap)
            onset = ntf_verdict(minor_ideal, bound).onset
            verdict_cache[key] = onset
        if onset is not None:
            return MinorsCertification(False, spec, checked, bound_cap)
    return MinorsCertification(True, None, checked, bound_cap)


@dataclass
class CheckVerdict:
    """Outcome of one verification: preconditions first, then the assertion.

    ``passed`` is None when the check is not applicable; ``conditional``
    marks conclusions whose hypotheses were recorded but not certified.
    """

    name: str
    applicable: bool
    passed: bool | None
    conditional: bool = False
    failed_precondition: str | None = None
    details: dict = field(default_factory=dict)


def check_colon_equivalence(
    ideal: MonomialIdeal,
    variables: Iterable[int],
    t: int,
    minors_certified: bool | None = None,
) -> CheckVerdict:
    """The full prime is associated to I^t iff it is associated to (I^t : prod y).

    The equivalence is proved under "every proper minor has no embedded
    primes"; when that certificate is not supplied the verdict is evaluated
    anyway and marked conditional.
    """
    _require_squarefree_proper(ideal)
    d = ideal.ring_dim
    ys = sorted(set(variables))
    exps = [0] * d
    for y in ys:
        if not 0 <= y < d:
            raise UsageError(f"variable {y} out of range [0, {d})")
        exps[y] = 1
    product = Monomial(tuple(exps))
    full = maximal_prime(d)
    power = ideal**t
    left = full in associated_primes(power).primes
    quotient = power.colon(product)
    right = (not quotient.is_unit()) and full in associated_primes(quotient).primes
    return CheckVerdict(
        name="colon_stability",
        applicable=True,
        passed=left == right,
        conditional=not bool(minors_certified),
        details={"t": t, "left": left, "right": right, "colon_by": str(product)},
    )


def check_onset_lower_bound(
    ideal: MonomialIdeal, verdict: NtfVerdict, minors_certified: bool | None = None
) -> CheckVerdict:
    """Any onset must come strictly after the matching number."""
    beta, _ = matching_number(ideal)
    if verdict.onset is None:
        return CheckVerdict(
            name="onset_lower_bound",
            applicable=True,
            passed=True,
            conditional=not bool(minors_certified),
            details={"onset": None, "matching_number": beta, "vacuous": True},
        )
    return CheckVerdict(
        name="onset_lower_bound",
        applicable=True,
        passed=verdict.onset >= beta + 1,
        conditional=not bool(minors_certified),
        details={"onset": verdict.onset, "matching_number": beta},
    )


def check_matching_colon_reduction(ideal: MonomialIdeal, t: int) -> CheckVerdict:
    """(I^t : product of a maximum matching) collapses to I^(t - matching).

    Applicable to unmixed Konig ideals with t past the matching number and
    the smaller power equal to its symbolic power; each precondition is
    verified and the first failure is named.
    """
    _require_squarefree_proper(ideal)
    h = hypergraph_of(ideal)
    beta, witness = matching_number(ideal)
    name = "matching_colon_reduction"

    def inapplicable(reason: str) -> CheckVerdict:
        return CheckVerdict(
            name=name,
            applicable=False,
            passed=None,
            failed_precondition=reason,
            details={"t": t, "matching_number": beta},
        )

    if not is_unmixed(ideal):
        return inapplicable("ideal is not unmixed")
    if not konig(h):
        return inapplicable("cover number differs from matching number")
    if t <= beta:
        return inapplicable(f"t={t} is not above the matching number {beta}")
    small = ideal ** (t - beta)
    if small != symbolic_power(ideal, t - beta):
        return inapplicable(f"I^{t - beta} differs from its symbolic power")
    product = witness[0]
    for g in witness[1:]:
        product = product.mul(g)
    reduced = (ideal**t).colon(product)
    return CheckVerdict(
        name=name,
        applicable=True,
        passed=reduced == small,
        details={"t": t, "matching_number": beta, "colon_by": str(product)},
    )


def check_unmixed_packing_ntf(
    ideal: MonomialIdeal,
    verdict: NtfVerdict,
    minors_certified: bool,
    unmixed: bool,
    packs: bool,
) -> CheckVerdict:
    """Unmixed packing ideals with clean minors should show no onset at all."""
    name = "unmixed_packing_ntf"
    for ok, reason in (
        (unmixed, "ideal is not unmixed"),
        (packs, "ideal does not have the packing property"),
        (minors_certified, "proper minors not certified clean"),
    ):
        if not ok:
            return CheckVerdict(
                name=name, applicable=False, passed=None, failed_precondition=reason
            )
    return CheckVerdict(
        name=name,
        applicable=True,
        passed=verdict.onset is None,
        details={"onset": verdict.onset, "bound": verdict.bound_used},
    )


def find_good_edge(ideal: MonomialIdeal) -> Monomial | None:
    """A generator meeting every minimal prime in exactly one variable, if any."""
    _require_squarefree_proper(ideal)
    primes = minimal_primes(ideal)
    for g in ideal.gens:
        support = set(g.support())
        if all(len(support & set(p.vars)) == 1 for p in primes):
            return g
    return None


def check_good_edge_ntf(
    ideal: MonomialIdeal,
    verdict: NtfVerdict,
    minors_certified: bool,
    good_edge: Monomial | None,
) -> CheckVerdict:
    """A good edge plus clean minors forces no onset."""
    name = "good_edge_ntf"
    if good_edge is None:
        return CheckVerdict(
            name=name, applicable=False, passed=None, failed_precondition="no good edge"
        )
    if not minors_certified:
        return CheckVerdict(
            name=name,
            applicable=False,
            passed=None,
            failed_precondition="proper minors not certified clean",
        )
    return CheckVerdict(
        name=name,
        applicable=True,
        passed=verdict.onset is None,
        details={"good_edge": str(good_edge), "onset": verdict.onset},
    )


def check_onset_at_matching_bound(
    ideal: MonomialIdeal,
    verdict: NtfVerdict,
    minors_certified: bool,
    packs: bool,
) -> CheckVerdict:
    """Onset lands exactly at matching number + 1, with the full prime embedded.

    Applies to connected hypergraphs without isolated vertices whose proper
    minors are certified clean but which fail the packing property.
    """
    name = "onset_at_matching_bound"
    h = hypergraph_of(ideal)
    beta, _ = matching_number(ideal)

    def inapplicable(reason: str) -> CheckVerdict:
        return CheckVerdict(
            name=name,
            applicable=False,
            passed=None,
            failed_precondition=reason,
            details={"matching_number": beta},
        )

    if not minors_certified:
        return inapplicable("proper minors not certified clean")
    if packs:
        return inapplicable("ideal has the packing property")
    if isolated_vertices(h):
        return inapplicable("hypergraph has isolated vertices")
    if len(connected_components(h)) != 1:
        return inapplicable("hypergraph is not connected")
    if verdict.bound_used < beta + 1:
        return inapplicable(f"bound {verdict.bound_used} stops below {beta + 1}")
    expected = maximal_prime(ideal.ring_dim)
    at_onset = (
        verdict.row(verdict.onset).embedded if verdict.onset is not None else ()
    )
    passed = verdict.onset == beta + 1 and at_onset == (expected,)
    return CheckVerdict(
        name=name,
        applicable=True,
        passed=passed,
        details={
            "matching_number": beta,
            "onset": verdict.onset,
            "embedded_at_onset": [str(p) for p in at_onset],
        },
    )


@dataclass
class AnalysisConfig:
    """Budgets and bound selection for :func:`analyze`."""

    bound: int | None = None
    bound_rule: str = BOUND_HALF_DIM
    max_power: int = DEFAULT_MAX_POWER
    max_minors: int = DEFAULT_MAX_MINORS
    minor_bound_cap: int | None = None


@dataclass
class AnalysisReport:
    """Everything the pipeline learned about one square-free ideal."""

    ideal: MonomialIdeal
    ring_dim: int
    effective_dim: int
    isolated: tuple[int, ...]
    component_count: int
    cover_number: int
    matching_number: int
    matching_witness: tuple[Monomial, ...]
    unmixed: bool
    konig: bool
    packing: bool
    packing_failure: MinorSpec | None
    good_edge: Monomial | None
    minors: MinorsCertification | None
    ntf: NtfVerdict | None
    stable_from: int | None
    stable_set: tuple[MonomialPrime, ...]
    checks: tuple[CheckVerdict, ...]
    errors: dict[str, str] = field(default_factory=dict)
    names: tuple[str, ...] | None = None


def analyze(ideal: MonomialIdeal, config: AnalysisConfig | None = None) -> AnalysisReport:
    """Full pipeline: invariants, minors certification, NTF scan, checks.

    Resource blowups in the minor scan or the power scan are captured in the
    report's ``errors`` map rather than aborting the whole analysis.
    """
    cfg = config or AnalysisConfig()
    _require_squarefree_proper(ideal)
    h = hypergraph_of(ideal)

    alpha = cover_number(h)
    beta, witness = matching_number(ideal)
    unmixed = is_unmixed(ideal)
    packs, packing_witness = packing(h)
    good = find_good_edge(ideal)
    iso = tuple(_mask_bits(isolated_vertices(h)))
    components = len(connected_components(h))
    bound = cfg.bound if cfg.bound is not None else default_bound(ideal, cfg.bound_rule)

    errors: dict[str, str] = {}
    minors: MinorsCertification | None = None
    try:
        minors = all_proper_minors_ntf(
            ideal, bound_cap=cfg.minor_bound_cap, max_minors=cfg.max_minors
        )
    except BudgetError as exc:
        errors["minors"] = str(exc)

    verdict: NtfVerdict | None = None
    try:
        verdict = ntf_verdict(ideal, bound, max_power=cfg.max_power)
    except BudgetError as exc:
        errors["ntf"] = str(exc)
        if isinstance(exc.partial, NtfVerdict) and exc.partial.per_power:
            verdict = exc.partial

    stable_from: int | None = None
    stable_set: tuple[MonomialPrime, ...] = ()
    if verdict is not None and verdict.per_power:
        stable_set = verdict.per_power[-1].ass
        t = len(verdict.per_power)
        while t > 1 and verdict.per_power[t - 2].ass == stable_set:
            t -= 1
        stable_from = t

    certified = bool(minors and minors.all_ntf)
    checks: list[CheckVerdict] = []
    if verdict is not None:
        checks.append(check_onset_lower_bound(ideal, verdict, certified))
        checks.append(
            check_onset_at_matching_bound(ideal, verdict, certified, packs)
        )
        checks.append(
            check_unmixed_packing_ntf(ideal, verdict, certified, unmixed, packs)
        )
        checks.append(check_good_edge_ntf(ideal, verdict, certified, good))
        checks.append(
            check_colon_equivalence(
                ideal, range(ideal.ring_dim), verdict.bound_used, certified
            )
        )
    checks.append(check_matching_colon_reduction(ideal, beta + 1))

    return AnalysisReport(
        ideal=ideal,
        ring_dim=ideal.ring_dim,
        effective_dim=_effective_dim(h),
        isolated=iso,
        component_count=components,
        cover_number=alpha,
        matching_number=beta,
        matching_witness=witness,
        unmixed=unmixed,
        konig=alpha == beta,
        packing=packs,
        packing_failure=packing_witness,
        good_edge=good,
        minors=minors,
        ntf=verdict,
        stable_from=stable_from,
        stable_set=stable_set,
        checks=tuple(checks),
        errors=errors,
    )


def _effective_dim(h: Hypergraph) -> int:
    support = 0
    for e in h.edges:
        if bin(e).count("1") >= 2:
            support |= e
    return bin(support).count("1")
