"""Shared instances: classic hypergraphs and a deterministic random corpus."""

from __future__ import annotations

import random

from edgeideals import Hypergraph, Monomial, MonomialIdeal

CORPUS_SEED = 91151
CORPUS_GENERAL = 120
CORPUS_SQUAREFREE = 100


def ideal_of_edges(n: int, edges: list[set[int]]) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(
        n, [[1 if v in e else 0 for v in range(n)] for e in edges]
    )


def cycle_graph(n: int) -> Hypergraph:
    return Hypergraph.of(n, [{i, (i + 1) % n} for i in range(n)])


def path_graph(n: int) -> Hypergraph:
    return Hypergraph.of(n, [{i, i + 1} for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Hypergraph:
    return Hypergraph.of(a + b, [{i, a + j} for i in range(a) for j in range(b)])


def triangle_ideal() -> MonomialIdeal:
    return ideal_of_edges(3, [{0, 1}, {1, 2}, {0, 2}])


def thick_five_cycle() -> MonomialIdeal:
    """Five triple edges, consecutive around a cycle of five vertices."""
    return ideal_of_edges(5, [{i % 5, (i + 1) % 5, (i + 2) % 5} for i in range(5)])


def packing_six() -> MonomialIdeal:
    """Six triple edges on six vertices: packs but has no good edge."""
    return ideal_of_edges(
        6, [{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {1, 2, 5}, {0, 3, 4}, {2, 4, 5}]
    )


def _random_ideal(rng: random.Random, max_exp: int) -> MonomialIdeal:
    while True:
        d = rng.randint(2, 5)
        n_gens = rng.randint(1, 6)
        gens = []
        for _ in range(n_gens):
            vec = tuple(rng.randint(0, max_exp) for _ in range(d))
            while not any(vec):
                vec = tuple(rng.randint(0, max_exp) for _ in range(d))
            gens.append(Monomial(vec))
        ideal = MonomialIdeal.from_gens(d, gens)
        if ideal.is_proper() and not ideal.is_zero():
            return ideal


def monomial_corpus() -> list[MonomialIdeal]:
    """Deterministic corpus: 120 general ideals plus 100 square-free ones.

    Every ideal is proper and nonzero with d <= 5, at most 6 generators, and
    exponents at most 3.
    """
    rng = random.Random(CORPUS_SEED)
    out = [_random_ideal(rng, 3) for _ in range(CORPUS_GENERAL)]
    out.extend(_random_ideal(rng, 1) for _ in range(CORPUS_SQUAREFREE))
    return out


def squarefree_corpus() -> list[MonomialIdeal]:
    return [ideal for ideal in monomial_corpus() if ideal.is_squarefree()]
