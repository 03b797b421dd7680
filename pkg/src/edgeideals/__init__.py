"""Exact tools for square-free monomial ideals and the hypergraphs they encode."""

from .errors import BudgetError, ExponentOverflowError, ParseError, UsageError
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    intersect_all,
    maximal_prime,
    minimalize,
)
from .hypergraphs import (
    Hypergraph,
    MinorResult,
    MinorSpec,
    apply_minor,
    connected_components,
    cover_number,
    distinct_proper_minors,
    edge_ideal,
    enumerate_minors,
    hypergraph_of,
    isolated_vertices,
    konig,
    max_matching,
    minimal_transversals,
    packing,
)
from .decomposition import (
    AssResult,
    IrreducibleComponent,
    ass_witness_oracle,
    associated_primes,
    irreducible_decomposition,
    is_unmixed,
    localize,
    minimal_primes,
    prime_power_ideal,
    symbolic_power,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ExponentOverflowError",
    "ParseError",
    "UsageError",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "intersect_all",
    "maximal_prime",
    "minimalize",
    "Hypergraph",
    "MinorResult",
    "MinorSpec",
    "apply_minor",
    "connected_components",
    "cover_number",
    "distinct_proper_minors",
    "edge_ideal",
    "enumerate_minors",
    "hypergraph_of",
    "isolated_vertices",
    "konig",
    "max_matching",
    "minimal_transversals",
    "packing",
    "AssResult",
    "IrreducibleComponent",
    "ass_witness_oracle",
    "associated_primes",
    "irreducible_decomposition",
    "is_unmixed",
    "localize",
    "minimal_primes",
    "prime_power_ideal",
    "symbolic_power",
    "__version__",
]
