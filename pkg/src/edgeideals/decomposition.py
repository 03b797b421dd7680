"""Irreducible decomposition, associated primes, and symbolic powers.

Two independent routes to the associated primes live side by side.  The
production path splits the ideal into irreducible components (generated by
pure variable powers) and reads the primes off the irredundant decomposition.
The oracle path searches every monomial c dividing lcm(gens) for colon
witnesses with (J : c) prime; searching that box is exhaustive because the
colon by c only depends on c clamped into the box.  The test suite holds the
two routes equal on a large random corpus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetError, UsageError
from .hypergraphs import hypergraph_of, minimal_transversals
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    intersect_all,
)

DEFAULT_WITNESS_BOX = 200_000

Vec = tuple[int, ...]
PurePowers = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure powers x_i^(a_i), one per support variable."""

    ring_dim: int
    pure_powers: PurePowers  # (variable, exponent) pairs, sorted by variable

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.pure_powers)

    def radical_prime(self) -> MonomialPrime:
        return MonomialPrime.of(self.ring_dim, self.support())

    def as_ideal(self) -> MonomialIdeal:
        gens = (Monomial.variable(self.ring_dim, v, e) for v, e in self.pure_powers)
        return MonomialIdeal.from_gens(self.ring_dim, gens)


@dataclass
class AssResult:
    """Associated primes in canonical order, with optional colon witnesses."""

    primes: tuple[MonomialPrime, ...]
    witnesses: dict[MonomialPrime, Monomial] | None = None


def _require_decomposable(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise UsageError("the zero ideal has no decomposition")
    if ideal.is_unit():
        raise UsageError("the unit ideal has no decomposition")


# ---------------------------------------------------------------------------
# splitting into irreducible pieces (raw exponent-tuple representation)


def _vdivides(a: Vec, b: Vec) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _adjoin(gens: tuple[Vec, ...], v: Vec) -> tuple[Vec, ...]:
    """Minimal generating set of (gens) + (v); gens is minimal and sorted."""
    dv = sum(v)
    kv = (dv, v)
    for g in gens:
        if (sum(g), g) > kv:
            break
        if _vdivides(g, v):
            return gens
    kept = [g for g in gens if not _vdivides(v, g)]
    kept.append(v)
    kept.sort(key=lambda g: (sum(g), g))
    return tuple(kept)


def _split_leaves(root: tuple[Vec, ...]) -> set[PurePowers]:
    """All irreducible leaves of the splitting recursion.

    Whenever a minimal generator factors into coprime non-unit parts u * v,
    the ideal is the intersection of (J + (u)) and (J + (v)); the leaves have
    every generator a pure power.  Visited ideals are memoized, and the leaf
    set is exactly the components collected over the split tree.
    """
    dim = len(root[0]) if root else 0
    seen: set[tuple[Vec, ...]] = {root}
    stack: list[tuple[Vec, ...]] = [root]
    leaves: set[PurePowers] = set()
    while stack:
        gens = stack.pop()
        pivot = None
        for g in gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) >= 2:
                pivot = (g, support[0])
                break
        if pivot is None:
            comp = tuple(
                sorted((next(i for i, e in enumerate(g) if e), max(g)) for g in gens)
            )
            leaves.add(comp)
            continue
        g, x = pivot
        u = tuple(g[x] if i == x else 0 for i in range(dim))
        v = tuple(0 if i == x else g[i] for i in range(dim))
        for child in (_adjoin(gens, u), _adjoin(gens, v)):
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return leaves


# ---------------------------------------------------------------------------
# irredundancy: a candidate component survives exactly when its corner
# monomial is a socle element of the localization at the component's support


class _LocalizationCache:
    """Localizations of the root ideal at variable subsets, minimalized."""

    def __init__(self, root: tuple[Vec, ...], dim: int) -> None:
        self.root = root
        self.dim = dim
        self._cache: dict[tuple[int, ...], tuple[tuple[int, Vec], ...] | None] = {}

    def get(self, support: tuple[int, ...]) -> tuple[tuple[int, Vec], ...] | None:
        """(degree, vec) pairs sorted by degree, or None for the unit ideal."""
        try:
            return self._cache[support]
        except KeyError:
            pass
        keep = set(support)
        local = set()
        unit = False
        for g in self.root:
            v = tuple(e if i in keep else 0 for i, e in enumerate(g))
            if not any(v):
                unit = True
                break
            local.add(v)
        if unit:
            self._cache[support] = None
            return None
        ordered = sorted(local, key=lambda g: (sum(g), g))
        kept: list[Vec] = []
        for m in ordered:
            if not any(_vdivides(g, m) for g in kept):
                kept.append(m)
        result = tuple((sum(g), g) for g in kept)
        self._cache[support] = result
        return result


def _member(local: tuple[tuple[int, Vec], ...], m: Vec, deg: int) -> bool:
    for dg, g in local:
        if dg > deg:
            return False
        if _vdivides(g, m):
            return True
    return False


def _survives(cache: _LocalizationCache, comp: PurePowers) -> bool:
    support = tuple(v for v, _ in comp)
    local = cache.get(support)
    if local is None:
        return False
    corner = [0] * cache.dim
    for v, e in comp:
        corner[v] = e - 1
    c = tuple(corner)
    deg = sum(c)
    if _member(local, c, deg):
        return False
    for v, _ in comp:
        bumped = tuple(e + 1 if i == v else e for i, e in enumerate(c))
        if not _member(local, bumped, deg + 1):
            return False
    return True


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The irredundant irreducible decomposition of a proper nonzero ideal.

    The ideal equals the intersection of the returned components and no
    component contains the intersection of the others.  Output order is
    canonical: by support size, support, then exponents.
    """
    _require_decomposable(ideal)
    root = tuple(g.exponents for g in ideal.gens)
    leaves = _split_leaves(root)
    cache = _LocalizationCache(root, ideal.ring_dim)
    comps = sorted(
        (c for c in leaves if _survives(cache, c)),
        key=lambda c: (len(c), tuple(v for v, _ in c), tuple(e for _, e in c)),
    )
    return tuple(IrreducibleComponent(ideal.ring_dim, c) for c in comps)


def associated_primes(ideal: MonomialIdeal) -> AssResult:
    """Radicals of the irredundant irreducible decomposition, as a prime set."""
    comps = irreducible_decomposition(ideal)
    primes = sorted({c.radical_prime() for c in comps}, key=MonomialPrime.sort_key)
    return AssResult(primes=tuple(primes))


def ass_witness_oracle(
    ideal: MonomialIdeal, max_box: int = DEFAULT_WITNESS_BOX
) -> AssResult:
    """Brute-force associated primes: scan every divisor c of lcm(gens).

    A prime is reported exactly when (J : c) equals it for some c in the
    divisor box, together with the first such witness.  Raises BudgetError
    when the box exceeds ``max_box`` points.
    """
    _require_decomposable(ideal)
    bound = ideal.lcm_of_gens().exponents
    size = 1
    for e in bound:
        size *= e + 1
    if size > max_box:
        raise BudgetError(f"witness box has {size} points, budget is {max_box}")
    witnesses: dict[MonomialPrime, Monomial] = {}
    for exps in itertools.product(*(range(e + 1) for e in bound)):
        c = Monomial(exps)
        quotient = ideal.colon(c)
        gens = quotient.gens
        if not gens or gens[0].is_unit():
            continue
        if all(g.degree() == 1 for g in gens):
            prime = MonomialPrime.of(ideal.ring_dim, (g.support()[0] for g in gens))
            witnesses.setdefault(prime, c)
    primes = tuple(sorted(witnesses, key=MonomialPrime.sort_key))
    return AssResult(primes=primes, witnesses=witnesses)


def minimal_primes(ideal: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    """Minimal primes over a proper nonzero ideal.

    These are the minimal vertex covers of the hypergraph of the radical.
    """
    _require_decomposable(ideal)
    return minimal_transversals(hypergraph_of(ideal.radical()))


def localize(ideal: MonomialIdeal, prime: MonomialPrime) -> MonomialIdeal:
    """Set every variable outside the prime to 1 (exponent 0), then minimalize."""
    if ideal.ring_dim != prime.ring_dim:
        raise UsageError("localization prime lives in a different ring")
    keep = set(prime.vars)
    gens = (
        Monomial(tuple(e if i in keep else 0 for i, e in enumerate(g.exponents)))
        for g in ideal.gens
    )
    return MonomialIdeal.from_gens(ideal.ring_dim, gens)


def prime_power_ideal(prime: MonomialPrime, t: int) -> MonomialIdeal:
    """t-th power of a variable-generated prime: all degree-t monomials in it."""
    if t < 1:
        raise UsageError(f"power must be >= 1, got {t}")
    gens = []
    for combo in itertools.combinations_with_replacement(prime.vars, t):
        exps = [0] * prime.ring_dim
        for v in combo:
            exps[v] += 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal.from_gens(prime.ring_dim, gens)


def symbolic_power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """The t-th symbolic power of a square-free ideal.

    Localizing a square-free ideal at a minimal prime P gives exactly P, so
    the component of the t-th ordinary power over P is P^t and the symbolic
    power is the intersection of those prime powers.
    """
    _require_decomposable(ideal)
    if not ideal.is_squarefree():
        raise UsageError("symbolic_power needs a square-free ideal")
    if t < 1:
        raise UsageError(f"power must be >= 1, got {t}")
    primes = minimal_primes(ideal)
    return intersect_all([prime_power_ideal(p, t) for p in primes])


def is_unmixed(ideal: MonomialIdeal) -> bool:
    """Whether every associated prime of the ideal has the same height."""
    heights = {p.height for p in associated_primes(ideal).primes}
    return len(heights) == 1
