"""Polarization of monomial ideals into square-free shadow-variable ideals.

A power x_i^e polarizes to the product of the first e shadows of x_i, so a
generator always uses a prefix of each variable's shadow block.  The flat
index space of the polarized ring is laid out block by block per base
variable, which lets the monomial and hypergraph machinery run unchanged.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from .decomposition import associated_primes, minimal_primes
from .errors import BudgetError, UsageError
from .monomials import Monomial, MonomialIdeal, MonomialPrime, var_name

DEFAULT_POLAR_DIM = 64


@dataclass(frozen=True)
class ShadowVar:
    """Copy number ``copy`` (1-based) of base variable ``base``."""

    base: int
    copy: int


@dataclass(frozen=True)
class PolarContext:
    """Layout of shadow variables for one polarization.

    ``copies[i]`` is the number of shadows allocated to base variable i (the
    maximal exponent of that variable across the minimal generators), and
    ``offsets[i]`` is the flat index of its first shadow.
    """

    base_dim: int
    copies: tuple[int, ...]
    offsets: tuple[int, ...]

    @classmethod
    def for_ideal(cls, ideal: MonomialIdeal) -> PolarContext:
        copies = [0] * ideal.ring_dim
        for g in ideal.gens:
            for i, e in enumerate(g.exponents):
                copies[i] = max(copies[i], e)
        offsets = []
        total = 0
        for c in copies:
            offsets.append(total)
            total += c
        return cls(ideal.ring_dim, tuple(copies), tuple(offsets))

    @property
    def dim(self) -> int:
        return self.offsets[-1] + self.copies[-1] if self.copies else 0

    def flat_index(self, base: int, copy: int) -> int:
        if not 0 <= base < self.base_dim:
            raise UsageError(f"base variable {base} out of range")
        if not 1 <= copy <= self.copies[base]:
            raise UsageError(f"variable {base} has no copy {copy}")
        return self.offsets[base] + copy - 1

    def shadow_at(self, flat: int) -> ShadowVar:
        if not 0 <= flat < self.dim:
            raise UsageError(f"flat index {flat} out of range [0, {self.dim})")
        base = bisect.bisect_right(self.offsets, flat) - 1
        while self.copies[base] == 0:
            base -= 1
        return ShadowVar(base, flat - self.offsets[base] + 1)

    def shadow_name(self, flat: int, names: Sequence[str] | None = None) -> str:
        s = self.shadow_at(flat)
        return f"{var_name(s.base, names)}_{s.copy}"

    def shadow_names(self, names: Sequence[str] | None = None) -> list[str]:
        return [self.shadow_name(i, names) for i in range(self.dim)]


def polarize_monomial(ctx: PolarContext, m: Monomial) -> Monomial:
    if m.ring_dim != ctx.base_dim:
        raise UsageError("monomial lives in a different ring than the context")
    support = []
    for i, e in enumerate(m.exponents):
        if e > ctx.copies[i]:
            raise UsageError(f"exponent {e} of variable {i} exceeds allocated copies")
        for j in range(1, e + 1):
            support.append(ctx.flat_index(i, j))
    return Monomial.from_support(ctx.dim, support)


def shadow_prefix_holds(ctx: PolarContext, m: Monomial) -> bool:
    """Whether every shadow present comes with all lower copies of its base."""
    for i in range(ctx.base_dim):
        seen_gap = False
        for j in range(1, ctx.copies[i] + 1):
            present = m.exponents[ctx.flat_index(i, j)] > 0
            if present and seen_gap:
                return False
            if not present:
                seen_gap = True
    return True


def polarize_ideal(ideal: MonomialIdeal) -> tuple[PolarContext, MonomialIdeal]:
    """Polarize each minimal generator; the result is square-free by design."""
    if ideal.is_zero() or ideal.is_unit():
        raise UsageError("polarization needs a proper nonzero ideal")
    ctx = PolarContext.for_ideal(ideal)
    gens = [polarize_monomial(ctx, g) for g in ideal.gens]
    assert all(shadow_prefix_holds(ctx, g) for g in gens)
    return ctx, MonomialIdeal.from_gens(ctx.dim, gens)


def depolarize_monomial(ctx: PolarContext, m: Monomial) -> Monomial:
    if m.ring_dim != ctx.dim:
        raise UsageError("monomial does not live in the polarized ring")
    exps = [0] * ctx.base_dim
    for flat, e in enumerate(m.exponents):
        if e:
            exps[ctx.shadow_at(flat).base] += e
    return Monomial(tuple(exps))


def depolarize_ideal(ctx: PolarContext, ideal: MonomialIdeal) -> MonomialIdeal:
    """Substitute each shadow by its base variable and minimalize."""
    gens = (depolarize_monomial(ctx, g) for g in ideal.gens)
    return MonomialIdeal.from_gens(ctx.base_dim, gens)


def depolarize_prime(ctx: PolarContext, prime: MonomialPrime) -> MonomialPrime:
    """Collapse shadows to their bases; distinct copies of a base merge."""
    if prime.ring_dim != ctx.dim:
        raise UsageError("prime does not live in the polarized ring")
    return MonomialPrime.of(ctx.base_dim, (ctx.shadow_at(v).base for v in prime.vars))


def lift_minimal_prime(ctx: PolarContext, prime: MonomialPrime) -> MonomialPrime:
    """Lift a base prime to first copies; minimal primes lift to minimal primes."""
    if prime.ring_dim != ctx.base_dim:
        raise UsageError("prime does not live in the base ring")
    return MonomialPrime.of(ctx.dim, (ctx.flat_index(v, 1) for v in prime.vars))


def one_shadow_property(ctx: PolarContext, prime: MonomialPrime) -> bool:
    """At most one shadow of each base variable occurs in the prime."""
    if prime.ring_dim != ctx.dim:
        raise UsageError("prime does not live in the polarized ring")
    bases = [ctx.shadow_at(v).base for v in prime.vars]
    return len(bases) == len(set(bases))


def check_one_shadow(
    ctx: PolarContext, polar_ideal: MonomialIdeal, prime: MonomialPrime
) -> bool:
    """One-shadow property of a minimal prime of the polarization.

    Raises UsageError when the prime is not actually minimal over the ideal;
    minimal primes are expected to always satisfy the property.
    """
    if prime not in minimal_primes(polar_ideal):
        raise UsageError(f"{prime} is not a minimal prime of the polarization")
    return one_shadow_property(ctx, prime)


@dataclass
class DepolarizationReport:
    """How the minimal primes of a polarized power map onto associated primes.

    ``fiber_sizes`` counts, per associated prime of the base power, how many
    minimal primes of the polarization depolarize to it.  ``onto`` and
    ``into`` record that the depolarized image covers, respectively stays
    inside, the associated primes computed directly in the base ring.
    """

    power: int
    context: PolarContext
    polar_ideal: MonomialIdeal
    polar_min: tuple[MonomialPrime, ...]
    base_ass: tuple[MonomialPrime, ...]
    image: tuple[MonomialPrime, ...]
    fiber_sizes: tuple[tuple[MonomialPrime, int], ...]
    onto: bool
    into: bool


def depolarization_correspondence(
    ideal: MonomialIdeal, t: int, max_dim: int = DEFAULT_POLAR_DIM
) -> DepolarizationReport:
    """Compare Min of the polarized t-th power against Ass of the power itself.

    The polarization is square-free, so its associated primes are exactly its
    minimal primes; their depolarizations are expected to cover every
    associated prime of the base power, usually many-to-one.
    """
    if not ideal.is_squarefree():
        raise UsageError("correspondence needs a square-free base ideal")
    if t < 1:
        raise UsageError(f"power must be >= 1, got {t}")
    power = ideal**t
    ctx = PolarContext.for_ideal(power)
    if ctx.dim > max_dim:
        raise BudgetError(f"polarized ring has {ctx.dim} variables, budget is {max_dim}")
    ctx, polar = polarize_ideal(power)
    polar_min = minimal_primes(polar)
    base_ass = associated_primes(power).primes
    fibers: dict[MonomialPrime, int] = {}
    for q in polar_min:
        p = depolarize_prime(ctx, q)
        fibers[p] = fibers.get(p, 0) + 1
    image = tuple(sorted(fibers, key=MonomialPrime.sort_key))
    fiber_sizes = tuple((p, fibers[p]) for p in image)
    return DepolarizationReport(
        power=t,
        context=ctx,
        polar_ideal=polar,
        polar_min=polar_min,
        base_ass=base_ass,
        image=image,
        fiber_sizes=fiber_sizes,
        onto=set(base_ass) <= set(image),
        into=set(image) <= set(base_ass),
    )
