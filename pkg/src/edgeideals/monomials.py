"""Monomials, monomial ideals, and variable-generated primes.

Everything here is exact integer combinatorics: a monomial is a fixed-length
exponent vector, an ideal is stored as its canonical minimal generating set,
and every operation is a pure function returning new immutable values, so all
types are safe to share across workers.

Canonical order for generators is (total degree, exponent vector), compared
as tuples.  Equality of ideals is therefore plain equality of the stored
generator tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ExponentOverflowError, UsageError

# Exponents are conceptually 16-bit.  Powers of square-free ideals stay tiny,
# but arithmetic still refuses to exceed this instead of wrapping.
EXPONENT_LIMIT = 0xFFFF


def var_name(index: int, names: Sequence[str] | None = None) -> str:
    """1-based default naming: variable 0 prints as ``x1``."""
    if names is not None and index < len(names):
        return names[index]
    return f"x{index + 1}"


def _require_same_dim(a: int, b: int) -> None:
    if a != b:
        raise UsageError(f"ring dimension mismatch: {a} != {b}")


@dataclass(frozen=True)
class Monomial:
    """An exponent vector; the all-zeros vector is the unit monomial 1."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        for e in self.exponents:
            if e < 0:
                raise UsageError(f"negative exponent {e}")
            if e > EXPONENT_LIMIT:
                raise ExponentOverflowError(f"exponent {e} exceeds {EXPONENT_LIMIT}")

    @classmethod
    def unit(cls, ring_dim: int) -> Monomial:
        return cls((0,) * ring_dim)

    @classmethod
    def variable(cls, ring_dim: int, index: int, exponent: int = 1) -> Monomial:
        if not 0 <= index < ring_dim:
            raise UsageError(f"variable index {index} out of range [0, {ring_dim})")
        return cls(tuple(exponent if i == index else 0 for i in range(ring_dim)))

    @classmethod
    def from_support(cls, ring_dim: int, support: Iterable[int]) -> Monomial:
        """Square-free monomial with exponent 1 on each listed variable."""
        exps = [0] * ring_dim
        for i in support:
            if not 0 <= i < ring_dim:
                raise UsageError(f"variable index {i} out of range [0, {ring_dim})")
            exps[i] = 1
        return cls(tuple(exps))

    @property
    def ring_dim(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.degree(), self.exponents)

    def divides(self, other: Monomial) -> bool:
        _require_same_dim(self.ring_dim, other.ring_dim)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        _require_same_dim(self.ring_dim, other.ring_dim)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        _require_same_dim(self.ring_dim, other.ring_dim)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def mul(self, other: Monomial) -> Monomial:
        _require_same_dim(self.ring_dim, other.ring_dim)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def colon_quotient(self, other: Monomial) -> Monomial:
        """self / gcd(self, other), i.e. the saturating componentwise difference."""
        _require_same_dim(self.ring_dim, other.ring_dim)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def exact_quotient(self, other: Monomial) -> Monomial:
        """self / other; requires other to divide self."""
        if not other.divides(self):
            raise UsageError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def radical(self) -> Monomial:
        return Monomial(tuple(min(e, 1) for e in self.exponents))

    def text(self, names: Sequence[str] | None = None) -> str:
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(var_name(i, names))
            elif e > 1:
                parts.append(f"{var_name(i, names)}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        return self.text()


def minimalize(ring_dim: int, gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal elements of ``gens`` in canonical order.

    Idempotent and insensitive to input order.  If the unit monomial is
    present the result collapses to the unit ideal's generating set.
    """
    uniq = sorted(set(gens), key=Monomial.sort_key)
    for m in uniq:
        _require_same_dim(ring_dim, m.ring_dim)
    if uniq and uniq[0].is_unit():
        return (uniq[0],)
    kept: list[Monomial] = []
    for m in uniq:
        # any strict divisor has lower degree, so it already sits in kept
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held as its canonical minimal generating set.

    The zero ideal has no generators; the unit ideal is generated by 1.
    Construct through :meth:`from_gens` (or the convenience classmethods) so
    the minimality and ordering invariants hold.
    """

    ring_dim: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, ring_dim: int, gens: Iterable[Monomial]) -> MonomialIdeal:
        return cls(ring_dim, minimalize(ring_dim, gens))

    @classmethod
    def from_exponents(cls, ring_dim: int, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls.from_gens(ring_dim, (Monomial(tuple(v)) for v in vectors))

    @classmethod
    def zero(cls, ring_dim: int) -> MonomialIdeal:
        return cls(ring_dim, ())

    @classmethod
    def unit_ideal(cls, ring_dim: int) -> MonomialIdeal:
        return cls(ring_dim, (Monomial.unit(ring_dim),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership: some generator divides ``m``.  The zero ideal contains nothing."""
        _require_same_dim(self.ring_dim, m.ring_dim)
        return any(g.divides(m) for g in self.gens)

    def lcm_of_gens(self) -> Monomial:
        if self.is_zero():
            raise UsageError("lcm of generators of the zero ideal")
        out = self.gens[0]
        for g in self.gens[1:]:
            out = out.lcm(g)
        return out

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _require_same_dim(self.ring_dim, other.ring_dim)
        return MonomialIdeal.from_gens(self.ring_dim, self.gens + other.gens)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _require_same_dim(self.ring_dim, other.ring_dim)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.ring_dim)
        products = [f.mul(g) for f in self.gens for g in other.gens]
        return MonomialIdeal.from_gens(self.ring_dim, products)

    def __pow__(self, t: int) -> MonomialIdeal:
        if t < 1:
            raise UsageError(f"power must be >= 1, got {t}")
        out = self
        for _ in range(t - 1):
            out = out * self
        return out

    def colon(self, m: Monomial) -> MonomialIdeal:
        """The colon ideal by a monomial; the unit ideal exactly when m is a member."""
        _require_same_dim(self.ring_dim, m.ring_dim)
        return MonomialIdeal.from_gens(self.ring_dim, (g.colon_quotient(m) for g in self.gens))

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        _require_same_dim(self.ring_dim, other.ring_dim)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.ring_dim)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        pairs = [f.lcm(g) for f in self.gens for g in other.gens]
        return MonomialIdeal.from_gens(self.ring_dim, pairs)

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal.from_gens(self.ring_dim, (g.radical() for g in self.gens))

    def text(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.text(names) for g in self.gens) + ")"

    def __str__(self) -> str:
        return self.text()


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """n-ary intersection, minimalizing after every pairwise step."""
    if not ideals:
        raise UsageError("intersection of an empty family")
    out = ideals[0]
    for j in ideals[1:]:
        out = out.intersect(j)
    return out


@dataclass(frozen=True)
class MonomialPrime:
    """A prime generated by a non-empty set of variables, stored sorted."""

    ring_dim: int
    vars: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vars:
            raise UsageError("a monomial prime needs at least one variable")
        if list(self.vars) != sorted(set(self.vars)):
            raise UsageError("prime variables must be strictly increasing")
        if self.vars[0] < 0 or self.vars[-1] >= self.ring_dim:
            raise UsageError(f"variable out of range [0, {self.ring_dim})")

    @classmethod
    def of(cls, ring_dim: int, variables: Iterable[int]) -> MonomialPrime:
        return cls(ring_dim, tuple(sorted(set(variables))))

    @classmethod
    def from_mask(cls, ring_dim: int, mask: int) -> MonomialPrime:
        return cls.of(ring_dim, (i for i in range(ring_dim) if mask >> i & 1))

    @property
    def height(self) -> int:
        return len(self.vars)

    def as_mask(self) -> int:
        mask = 0
        for i in self.vars:
            mask |= 1 << i
        return mask

    def contains_var(self, index: int) -> bool:
        return index in self.vars

    def as_ideal(self) -> MonomialIdeal:
        gens = (Monomial.variable(self.ring_dim, i) for i in self.vars)
        return MonomialIdeal.from_gens(self.ring_dim, gens)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.vars), self.vars)

    def text(self, names: Sequence[str] | None = None) -> str:
        return "(" + ", ".join(var_name(i, names) for i in self.vars) + ")"

    def __str__(self) -> str:
        return self.text()


def maximal_prime(ring_dim: int) -> MonomialPrime:
    """The prime generated by every variable of the ring."""
    return MonomialPrime.of(ring_dim, range(ring_dim))
