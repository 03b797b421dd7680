"""Decomposition, associated primes, and symbolic powers.

The irredundancy filter and the symbolic-power shortcut each get checked
against their definitions here: components against the drop-if-others-contain
rule, symbolic powers against the intersection of the power's components
sitting over minimal primes.
"""

from __future__ import annotations

import itertools

import pytest

from edgeideals import (
    BudgetError,
    IrreducibleComponent,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    UsageError,
    ass_witness_oracle,
    associated_primes,
    intersect_all,
    irreducible_decomposition,
    is_unmixed,
    localize,
    maximal_prime,
    minimal_primes,
    prime_power_ideal,
    symbolic_power,
)
from edgeideals.decomposition import _split_leaves
from helpers import packing_six, thick_five_cycle, triangle_ideal


def components_by_definition(ideal: MonomialIdeal) -> set[tuple[tuple[int, int], ...]]:
    """Independent irredundancy oracle: raw splitting leaves, then drop any
    component containing the intersection of the others (identical leaves are
    already merged by the set)."""
    leaves = sorted(_split_leaves(tuple(g.exponents for g in ideal.gens)))
    as_ideal = {
        c: IrreducibleComponent(ideal.ring_dim, c).as_ideal() for c in leaves
    }

    def contains_ideal(big: MonomialIdeal, small: MonomialIdeal) -> bool:
        return all(big.contains(g) for g in small.gens)

    kept = list(leaves)
    changed = True
    while changed:
        changed = False
        for c in list(kept):
            others = [as_ideal[o] for o in kept if o != c]
            if others and contains_ideal(as_ideal[c], intersect_all(others)):
                kept.remove(c)
                changed = True
                break
    return set(kept)


def test_single_edge_splits():
    comps = irreducible_decomposition(MonomialIdeal.from_exponents(2, [[1, 1]]))
    assert {c.pure_powers for c in comps} == {((0, 1),), ((1, 1),)}


def test_triangle_components_are_covers():
    comps = irreducible_decomposition(triangle_ideal())
    assert {c.radical_prime().vars for c in comps} == {(0, 1), (1, 2), (0, 2)}


def test_mixed_example_decomposition():
    # (x^2, x*y) = (x) meet (x^2, y)
    J = MonomialIdeal.from_exponents(2, [[2, 0], [1, 1]])
    comps = irreducible_decomposition(J)
    assert {c.pure_powers for c in comps} == {((0, 1),), ((0, 2), (1, 1))}
    assert intersect_all([c.as_ideal() for c in comps]) == J


def test_decomposition_rejects_degenerate():
    with pytest.raises(UsageError):
        irreducible_decomposition(MonomialIdeal.zero(2))
    with pytest.raises(UsageError):
        irreducible_decomposition(MonomialIdeal.unit_ideal(2))


def test_decomposition_matches_definition_on_corpus(corpus):
    for ideal in corpus[::7]:
        comps = irreducible_decomposition(ideal)
        assert {c.pure_powers for c in comps} == components_by_definition(ideal)
        assert intersect_all([c.as_ideal() for c in comps]) == ideal


def test_ass_of_triangle_square():
    primes = associated_primes(triangle_ideal() ** 2).primes
    assert {p.vars for p in primes} == {(0, 1), (0, 2), (1, 2), (0, 1, 2)}


def test_ass_of_squarefree_equals_min(sf_corpus):
    for ideal in sf_corpus[::5]:
        assert associated_primes(ideal).primes == minimal_primes(ideal)


def test_witness_oracle_triangle_square():
    I2 = triangle_ideal() ** 2
    result = ass_witness_oracle(I2)
    assert result.primes == associated_primes(I2).primes
    top = maximal_prime(3)
    assert top in result.witnesses
    c = result.witnesses[top]
    assert I2.colon(c) == top.as_ideal()


def test_witness_oracle_thick_five_cycle():
    # (I^2 : x1*x2*x3*x4*x5) is the full prime; the witness degree must be
    # 3t - 1, one below the degree of the generators of I^t
    I = thick_five_cycle()
    c = Monomial((1, 1, 1, 1, 1))
    assert (I**2).colon(c) == maximal_prime(5).as_ideal()
    result = ass_witness_oracle(I**2)
    assert maximal_prime(5) in result.primes
    witness = result.witnesses[maximal_prime(5)]
    assert (I**2).colon(witness) == maximal_prime(5).as_ideal()


def test_witness_oracle_principal():
    result = ass_witness_oracle(MonomialIdeal.from_exponents(1, [[2]]))
    assert [p.vars for p in result.primes] == [(0,)]
    assert result.witnesses[result.primes[0]] == Monomial((1,))


def test_witness_oracle_budget():
    with pytest.raises(BudgetError):
        ass_witness_oracle(triangle_ideal() ** 2, max_box=5)


def test_oracle_equivalence_sample(corpus):
    for ideal in corpus[::10]:
        assert ass_witness_oracle(ideal).primes == associated_primes(ideal).primes


def test_minimal_primes():
    assert {p.vars for p in minimal_primes(triangle_ideal())} == {(0, 1), (1, 2), (0, 2)}
    six = {p.vars for p in minimal_primes(packing_six())}
    assert (0, 2, 4) in six and (1, 3, 5) in six
    assert (0, 5) in six  # x1, x6 covers all six edges
    principal = MonomialIdeal.from_exponents(2, [[1, 0]])
    assert [p.vars for p in minimal_primes(principal)] == [(0,)]


def test_minimal_primes_are_inclusion_minimal_ass(corpus):
    for ideal in corpus[::9]:
        ass = set(associated_primes(ideal).primes)
        mins = set(minimal_primes(ideal))
        assert mins <= ass
        for p in ass:
            if not any(set(q.vars) < set(p.vars) for q in ass):
                assert p in mins


def test_localize():
    tri = triangle_ideal()
    at_xy = localize(tri, MonomialPrime.of(3, [0, 1]))
    assert at_xy == MonomialIdeal.from_exponents(3, [[1, 0, 0], [0, 1, 0]])
    assert localize(tri, maximal_prime(3)) == tri
    cube = MonomialIdeal.from_exponents(3, [[1, 1, 1]])
    assert localize(cube, MonomialPrime.of(3, [0])) == MonomialIdeal.from_exponents(
        3, [[1, 0, 0]]
    )


def test_symbolic_power_basics():
    tri = triangle_ideal()
    assert symbolic_power(tri, 1) == tri
    xyz = Monomial((1, 1, 1))
    assert symbolic_power(tri, 2).contains(xyz)
    assert not (tri**2).contains(xyz)
    with pytest.raises(UsageError):
        symbolic_power(MonomialIdeal.from_exponents(2, [[2, 0]]), 2)


def symbolic_by_decomposition(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """Secondary route: intersect the components of I^t over minimal primes."""
    mins = set(minimal_primes(ideal))
    comps = irreducible_decomposition(ideal**t)
    keep = [c.as_ideal() for c in comps if c.radical_prime() in mins]
    return intersect_all(keep)


def test_symbolic_power_matches_component_route(sf_corpus):
    tri = triangle_ideal()
    for t in (1, 2, 3):
        assert symbolic_power(tri, t) == symbolic_by_decomposition(tri, t)
    for ideal in sf_corpus[::6]:
        for t in (1, 2):
            assert symbolic_power(ideal, t) == symbolic_by_decomposition(ideal, t)


def test_symbolic_contains_power(sf_corpus):
    for ideal in sf_corpus[::8]:
        power = ideal**2
        sym = symbolic_power(ideal, 2)
        assert all(sym.contains(g) for g in power.gens)


def test_packing_six_symbolic_square_recorded():
    # no published value: both routes must simply agree
    I = packing_six()
    assert symbolic_power(I, 2) == symbolic_by_decomposition(I, 2)


def test_prime_power_ideal():
    p = MonomialPrime.of(3, [0, 1])
    assert prime_power_ideal(p, 2) == MonomialIdeal.from_exponents(
        3, [[2, 0, 0], [1, 1, 0], [0, 2, 0]]
    )


def test_is_unmixed():
    assert is_unmixed(triangle_ideal())
    assert not is_unmixed(packing_six())
    assert is_unmixed(MonomialIdeal.from_exponents(2, [[1, 0]]))
