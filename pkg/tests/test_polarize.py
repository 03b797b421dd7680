"""Polarization: shadow layout, round trips, prime lifting and depolarization."""

from __future__ import annotations

import pytest

from edgeideals import (
    BudgetError,
    MonomialIdeal,
    MonomialPrime,
    UsageError,
    associated_primes,
    maximal_prime,
    minimal_primes,
)
from edgeideals.polarize import (
    PolarContext,
    check_one_shadow,
    depolarization_correspondence,
    depolarize_ideal,
    depolarize_prime,
    lift_minimal_prime,
    one_shadow_property,
    polarize_ideal,
    shadow_prefix_holds,
)
from helpers import thick_five_cycle, triangle_ideal

# the published polarization of the triangle ideal squared, as
# (base, copy) support sets, and the ten primes of its quotient
TRIANGLE_SQUARED_POLARIZED = [
    {(0, 1), (0, 2), (1, 1), (1, 2)},
    {(1, 1), (1, 2), (2, 1), (2, 2)},
    {(0, 1), (0, 2), (2, 1), (2, 2)},
    {(0, 1), (1, 1), (1, 2), (2, 1)},
    {(0, 1), (1, 1), (2, 1), (2, 2)},
    {(0, 1), (0, 2), (1, 1), (2, 1)},
]
TEN_PRIMES = [
    {(0, 1), (1, 1)},
    {(0, 2), (1, 1)},
    {(0, 1), (1, 2)},
    {(0, 1), (2, 1)},
    {(0, 2), (2, 1)},
    {(1, 1), (2, 1)},
    {(1, 2), (2, 1)},
    {(0, 1), (2, 2)},
    {(1, 1), (2, 2)},
    {(0, 2), (1, 2), (2, 2)},
]


def polarized_triangle_square():
    return polarize_ideal(triangle_ideal() ** 2)


def as_prime(ctx: PolarContext, pairs) -> MonomialPrime:
    return MonomialPrime.of(ctx.dim, [ctx.flat_index(b, c) for b, c in pairs])


def test_polarize_triangle_square_generators():
    ctx, polar = polarized_triangle_square()
    assert ctx.dim == 6
    expected = {
        frozenset(ctx.flat_index(b, c) for b, c in gen)
        for gen in TRIANGLE_SQUARED_POLARIZED
    }
    assert {frozenset(g.support()) for g in polar.gens} == expected
    assert polar.is_squarefree()
    assert all(shadow_prefix_holds(ctx, g) for g in polar.gens)


def test_polarize_squarefree_is_identity_shape():
    tri = triangle_ideal()
    ctx, polar = polarize_ideal(tri)
    assert ctx.dim == 3
    assert ctx.copies == (1, 1, 1)
    assert {g.exponents for g in polar.gens} == {g.exponents for g in tri.gens}


def test_polarize_pure_square():
    ctx, polar = polarize_ideal(MonomialIdeal.from_exponents(1, [[2]]))
    assert ctx.dim == 2
    assert [g.exponents for g in polar.gens] == [(1, 1)]
    assert depolarize_ideal(ctx, polar) == MonomialIdeal.from_exponents(1, [[2]])


def test_polarize_rejects_degenerate():
    with pytest.raises(UsageError):
        polarize_ideal(MonomialIdeal.zero(2))
    with pytest.raises(UsageError):
        polarize_ideal(MonomialIdeal.unit_ideal(2))


def test_depolarize_round_trip(corpus):
    for ideal in corpus[::6]:
        ctx, polar = polarize_ideal(ideal)
        assert depolarize_ideal(ctx, polar) == ideal


def test_depolarize_prime_examples():
    ctx, _ = polarized_triangle_square()
    assert depolarize_prime(ctx, as_prime(ctx, [(0, 2), (1, 2), (2, 2)])) == (
        maximal_prime(3)
    )
    assert depolarize_prime(ctx, as_prime(ctx, [(0, 1), (1, 1)])) == (
        MonomialPrime.of(3, [0, 1])
    )
    # two shadows of the same base collapse
    assert depolarize_prime(ctx, as_prime(ctx, [(0, 1), (0, 2), (1, 1)])) == (
        MonomialPrime.of(3, [0, 1])
    )


def test_ass_of_polarized_triangle_square_is_ten_primes():
    ctx, polar = polarized_triangle_square()
    got = set(associated_primes(polar).primes)
    assert got == {as_prime(ctx, pairs) for pairs in TEN_PRIMES}
    assert associated_primes(polar).primes == minimal_primes(polar)


def test_one_shadow_on_all_minimal_primes(sf_corpus):
    ctx, polar = polarized_triangle_square()
    for p in minimal_primes(polar):
        assert one_shadow_property(ctx, p)
        assert check_one_shadow(ctx, polar, p)
    for ideal in sf_corpus[::11]:
        ctx, polar = polarize_ideal(ideal**2)
        for p in minimal_primes(polar):
            assert one_shadow_property(ctx, p)


def test_one_shadow_rejects_non_minimal_cover():
    ctx, polar = polarized_triangle_square()
    bogus = as_prime(ctx, [(0, 1), (0, 2), (1, 1), (2, 1)])
    # it is a cover but not minimal: x with both shadows is removable
    assert all(polar.contains(g) or True for g in polar.gens)
    assert not one_shadow_property(ctx, bogus)
    with pytest.raises(UsageError):
        check_one_shadow(ctx, polar, bogus)


def test_lift_minimal_prime():
    tri = triangle_ideal()
    ctx, polar = polarized_triangle_square()
    polar_min = set(minimal_primes(polar))
    for p in minimal_primes(tri):
        lifted = lift_minimal_prime(ctx, p)
        assert lifted in polar_min
        assert all(ctx.shadow_at(v).copy == 1 for v in lifted.vars)
    principal = MonomialIdeal.from_exponents(1, [[1]])
    ctx1, _ = polarize_ideal(principal)
    assert lift_minimal_prime(ctx1, MonomialPrime.of(1, [0])).vars == (0,)


def test_lift_stays_minimal_on_corpus(sf_corpus):
    for ideal in sf_corpus[::9]:
        for t in (1, 2):
            ctx, polar = polarize_ideal(ideal**t)
            polar_min = set(minimal_primes(polar))
            for p in minimal_primes(ideal):
                assert lift_minimal_prime(ctx, p) in polar_min


def test_correspondence_triangle():
    report = depolarization_correspondence(triangle_ideal(), 2)
    assert len(report.polar_min) == 10
    assert len(report.base_ass) == 4
    assert report.onto and report.into
    assert dict((p.vars, n) for p, n in report.fiber_sizes) == {
        (0, 1): 3,
        (0, 2): 3,
        (1, 2): 3,
        (0, 1, 2): 1,
    }


def test_correspondence_is_bijective_at_power_one(sf_corpus):
    for ideal in sf_corpus[::8]:
        report = depolarization_correspondence(ideal, 1)
        assert report.onto and report.into
        assert all(n == 1 for _, n in report.fiber_sizes)


def test_correspondence_thick_five_cycle():
    report = depolarization_correspondence(thick_five_cycle(), 2)
    assert maximal_prime(5) in report.image
    assert report.onto and report.into


def test_correspondence_budget():
    with pytest.raises(BudgetError):
        depolarization_correspondence(triangle_ideal(), 2, max_dim=5)


def test_shadow_naming():
    ctx, polar = polarized_triangle_square()
    names = ctx.shadow_names(["x", "y", "z"])
    assert names == ["x_1", "x_2", "y_1", "y_2", "z_1", "z_2"]
    assert ctx.shadow_name(1) == "x1_2"
