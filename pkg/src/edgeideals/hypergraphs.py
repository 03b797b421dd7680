"""Simple hypergraphs as bit-set edge families.

Edges are int bit masks over vertex indices [0, n).  Minors keep the original
vertex indexing, so a deletion or contraction never renumbers anything; the
surviving structure is read off the edges alone.  Vertex covers, matchings,
and the Konig/packing predicates are computed by exact branch-and-bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import UsageError
from .monomials import Monomial, MonomialIdeal, MonomialPrime

KIND_PROPER = "proper"
KIND_ZERO_IDEAL = "zero_ideal"
KIND_UNIT_IDEAL = "unit_ideal"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_to_vec(mask: int, n: int) -> tuple[int, ...]:
    return tuple(mask >> i & 1 for i in range(n))


def _edge_key(mask: int, n: int) -> tuple[int, tuple[int, ...]]:
    # mirrors the (degree, exponent vector) order used for ideal generators
    return (bin(mask).count("1"), _mask_to_vec(mask, n))


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph: deduplicated edges with no mutual containments."""

    n_vertices: int
    edges: tuple[int, ...]

    @classmethod
    def of(cls, n_vertices: int, edges: Iterable[int | Iterable[int]]) -> Hypergraph:
        """Build from bit masks or vertex iterables; reduces to minimal edges."""
        masks = set()
        for e in edges:
            if isinstance(e, int):
                mask = e
            else:
                mask = 0
                for v in e:
                    if not 0 <= v < n_vertices:
                        raise UsageError(f"vertex {v} out of range [0, {n_vertices})")
                    mask |= 1 << v
            if mask == 0:
                raise UsageError("empty edge (the unit-ideal case is not a hypergraph)")
            if mask >> n_vertices:
                raise UsageError("edge mentions a vertex outside the vertex range")
            masks.add(mask)
        minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
        minimal.sort(key=lambda m: _edge_key(m, n_vertices))
        return cls(n_vertices, tuple(minimal))

    def edge_vertices(self, mask: int) -> tuple[int, ...]:
        return tuple(_bits(mask))

    def support_mask(self) -> int:
        out = 0
        for e in self.edges:
            out |= e
        return out

    def is_degenerate(self) -> bool:
        return not self.edges

    def canonical_form(self) -> tuple[int, ...]:
        return self.edges


@dataclass(frozen=True)
class MinorSpec:
    """Vertices to delete (set to 0) and contract (set to 1); disjoint masks."""

    delete: int = 0
    contract: int = 0

    def __post_init__(self) -> None:
        if self.delete & self.contract:
            raise UsageError("delete and contract sets overlap")

    def is_identity(self) -> bool:
        return self.delete == 0 and self.contract == 0

    def describe(self, names: Sequence[str] | None = None) -> dict:
        from .monomials import var_name

        return {
            "delete": [var_name(i, names) for i in _bits(self.delete)],
            "contract": [var_name(i, names) for i in _bits(self.contract)],
        }


@dataclass(frozen=True)
class MinorResult:
    """Outcome of a minor: a proper hypergraph, or a degenerate ideal marker."""

    kind: str
    hypergraph: Hypergraph | None = None

    @classmethod
    def proper(cls, h: Hypergraph) -> MinorResult:
        return cls(KIND_PROPER, h)

    @classmethod
    def zero(cls) -> MinorResult:
        return cls(KIND_ZERO_IDEAL)

    @classmethod
    def unit(cls) -> MinorResult:
        return cls(KIND_UNIT_IDEAL)


def edge_ideal(h: Hypergraph) -> MonomialIdeal:
    """The square-free ideal generated by one monomial per edge."""
    gens = (Monomial.from_support(h.n_vertices, _bits(e)) for e in h.edges)
    return MonomialIdeal.from_gens(h.n_vertices, gens)


def hypergraph_of(ideal: MonomialIdeal) -> Hypergraph:
    """Inverse of :func:`edge_ideal`; requires a square-free ideal."""
    if not ideal.is_squarefree():
        raise UsageError("hypergraph_of needs a square-free ideal")
    if ideal.is_unit():
        raise UsageError("the unit ideal has no hypergraph (empty edge)")
    return Hypergraph.of(ideal.ring_dim, (g.support_mask() for g in ideal.gens))


def apply_minor(h: Hypergraph, spec: MinorSpec) -> MinorResult:
    """Delete first (drop incident edges), then contract (shrink edges).

    A fully contracted edge means 1 lies in the ideal, reported as the
    unit-ideal marker; an empty edge set is the zero-ideal marker.  The
    result does not depend on how a mixed minor is interleaved.
    """
    full = (1 << h.n_vertices) - 1
    if (spec.delete | spec.contract) & ~full:
        raise UsageError("minor spec mentions vertices outside the range")
    kept = [e for e in h.edges if not e & spec.delete]
    shrunk = [e & ~spec.contract for e in kept]
    if any(e == 0 for e in shrunk):
        return MinorResult.unit()
    if not shrunk:
        return MinorResult.zero()
    return MinorResult.proper(Hypergraph.of(h.n_vertices, shrunk))


def enumerate_minors(h: Hypergraph) -> Iterator[tuple[MinorSpec, MinorResult]]:
    """All 3^n keep/delete/contract assignments, in deterministic ternary order."""
    n = h.n_vertices
    for code in range(3**n):
        delete = contract = 0
        rest = code
        for v in range(n):
            rest, digit = divmod(rest, 3)
            if digit == 1:
                delete |= 1 << v
            elif digit == 2:
                contract |= 1 << v
        spec = MinorSpec(delete, contract)
        yield spec, apply_minor(h, spec)


def distinct_proper_minors(h: Hypergraph) -> list[tuple[MinorSpec, Hypergraph]]:
    """Proper minors from non-identity specs, deduplicated by edge set.

    Canonical form keeps original vertex indices; no isomorphism rejection.
    """
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[MinorSpec, Hypergraph]] = []
    for spec, result in enumerate_minors(h):
        if spec.is_identity() or result.kind != KIND_PROPER:
            continue
        assert result.hypergraph is not None
        key = result.hypergraph.canonical_form()
        if key in seen:
            continue
        seen.add(key)
        out.append((spec, result.hypergraph))
    return out


def _require_edges(h: Hypergraph) -> tuple[int, ...]:
    if h.is_degenerate():
        raise UsageError("hypergraph has no edges")
    return h.edges


def _is_minimal_cover(edges: Sequence[int], cover: int) -> bool:
    for v in _bits(cover):
        bit = 1 << v
        if not any(e & cover == bit for e in edges):
            return False
    return True


def minimal_transversals(h: Hypergraph) -> tuple[MonomialPrime, ...]:
    """All inclusion-minimal vertex covers, in canonical order.

    Branches on the first uncovered edge; vertices already tried at a branch
    point are excluded below it, which prunes dominated assignments.  The
    candidates are then filtered down to the inclusion-minimal ones.
    """
    edges = _require_edges(h)
    found: set[int] = set()

    def rec(i: int, chosen: int, excluded: int) -> None:
        while i < len(edges) and edges[i] & chosen:
            i += 1
        if i == len(edges):
            found.add(chosen)
            return
        tried = 0
        for v in _bits(edges[i] & ~excluded):
            rec(i + 1, chosen | 1 << v, excluded | tried)
            tried |= 1 << v

    rec(0, 0, 0)
    primes = [
        MonomialPrime.from_mask(h.n_vertices, c)
        for c in found
        if _is_minimal_cover(edges, c)
    ]
    primes.sort(key=MonomialPrime.sort_key)
    return tuple(primes)


def cover_number(h: Hypergraph) -> int:
    """Minimum size of a vertex cover, by branch-and-bound."""
    edges = _require_edges(h)
    best = bin(h.support_mask()).count("1")

    def matching_lower_bound(i: int, chosen: int) -> int:
        used = 0
        count = 0
        for j in range(i, len(edges)):
            e = edges[j]
            if e & chosen or e & used:
                continue
            used |= e
            count += 1
        return count

    def rec(i: int, chosen: int, size: int) -> None:
        nonlocal best
        while i < len(edges) and edges[i] & chosen:
            i += 1
        if i == len(edges):
            best = min(best, size)
            return
        if size + matching_lower_bound(i, chosen) >= best:
            return
        for v in _bits(edges[i]):
            rec(i + 1, chosen | 1 << v, size + 1)

    rec(0, 0, 0)
    return best


def max_matching(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Maximum set of pairwise disjoint edges; returns (size, witness edges).

    The witness is the lexicographically first maximum matching in the
    canonical edge order, so repeated runs agree.
    """
    edges = _require_edges(h)
    best: list[int] = []

    def rec(i: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            if len(chosen) > len(best):
                best = list(chosen)
            return
        e = edges[i]
        if not e & used:
            chosen.append(e)
            rec(i + 1, used | e, chosen)
            chosen.pop()
        rec(i + 1, used, chosen)

    rec(0, 0, [])
    return len(best), tuple(best)


def konig(h: Hypergraph) -> bool:
    """Whether the cover number equals the matching number."""
    return cover_number(h) == max_matching(h)[0]


def packing(h: Hypergraph) -> tuple[bool, MinorSpec | None]:
    """Konig for the hypergraph and every proper minor.

    Degenerate minors pass vacuously.  On failure the witness minor spec is
    returned, the identity spec when the hypergraph itself fails Konig.
    """
    if not konig(h):
        return False, MinorSpec()
    for spec, minor in distinct_proper_minors(h):
        if not konig(minor):
            return False, spec
    return True, None


def connected_components(h: Hypergraph) -> list[Hypergraph]:
    """Edge-connectivity components, ordered by their smallest vertex.

    Vertices incident to no edge belong to no component.
    """
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in h.edges:
        verts = list(_bits(e))
        for v in verts:
            parent.setdefault(v, v)
        for v in verts[1:]:
            parent[find(verts[0])] = find(v)

    groups: dict[int, list[int]] = {}
    for e in h.edges:
        root = find(next(_bits(e)))
        groups.setdefault(root, []).append(e)
    ordered = sorted(groups.values(), key=lambda es: min(min(_bits(e)) for e in es))
    return [Hypergraph.of(h.n_vertices, es) for es in ordered]


def isolated_vertices(h: Hypergraph) -> int:
    """Mask of vertices whose incident edge is the singleton on that vertex."""
    out = 0
    for e in h.edges:
        if bin(e).count("1") == 1:
            out |= e
    return out
