"""Exhaustive search over small hypergraphs for packing and onset anomalies.

Candidates are edge families using every vertex of their ground set, so the
same structure never reappears padded with unused vertices.  Deduplication
under vertex relabeling is a brute-force scan over all permutations, which is
the point at these sizes: the canonical form is trivially auditable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .analysis import (
    all_proper_minors_ntf,
    check_onset_at_matching_bound,
    default_bound,
    find_good_edge,
    matching_number,
    ntf_verdict,
)
from .decomposition import is_unmixed
from .errors import BudgetError, UsageError
from .hypergraphs import (
    Hypergraph,
    cover_number,
    distinct_proper_minors,
    edge_ideal,
    konig,
    max_matching,
    packing,
)

PREDICATE_MIN_NON_PACKING = "minimally-non-packing"
PREDICATE_ONSET_BOUND = "onset-equals-matching-plus-1"
PREDICATE_NTF_VIOLATION = "ntf-violation"

PREDICATES = (
    PREDICATE_MIN_NON_PACKING,
    PREDICATE_ONSET_BOUND,
    PREDICATE_NTF_VIOLATION,
)

DEDUP_NONE = "none"
DEDUP_PERMUTATION = "permutation-canonical"

MAX_EDGE_SLOTS = 22


@dataclass(frozen=True)
class SearchConfig:
    d_max: int
    edge_size_min: int = 2
    edge_size_max: int = 2
    max_edges: int | None = None
    dedup: str = DEDUP_PERMUTATION
    predicate: str = PREDICATE_MIN_NON_PACKING
    limit: int | None = None
    resume: str | None = None

    def __post_init__(self) -> None:
        if self.d_max < 1 or self.d_max > 8:
            raise UsageError("d_max must be between 1 and 8")
        if not 1 <= self.edge_size_min <= self.edge_size_max:
            raise UsageError("bad edge size range")
        if self.predicate not in PREDICATES:
            raise UsageError(f"unknown predicate {self.predicate!r}")
        if self.dedup not in (DEDUP_NONE, DEDUP_PERMUTATION):
            raise UsageError(f"unknown dedup mode {self.dedup!r}")


@dataclass
class SearchHit:
    index: int
    hypergraph: Hypergraph
    summary: dict


def _permutation_canonical(h: Hypergraph) -> tuple[int, ...]:
    n = h.n_vertices
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(n)):
        relabeled = []
        for e in h.edges:
            mask = 0
            for v in range(n):
                if e >> v & 1:
                    mask |= 1 << perm[v]
            relabeled.append(mask)
        key = tuple(sorted(relabeled))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _candidates(cfg: SearchConfig) -> Iterator[tuple[int, Hypergraph]]:
    """Simple hypergraphs in deterministic order with a running index."""
    index = 0
    for d in range(1, cfg.d_max + 1):
        slots = []
        for size in range(cfg.edge_size_min, min(cfg.edge_size_max, d) + 1):
            for combo in itertools.combinations(range(d), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                slots.append(mask)
        slots.sort(key=lambda m: (bin(m).count("1"), m))
        if len(slots) > MAX_EDGE_SLOTS:
            raise BudgetError(
                f"{len(slots)} possible edges at d={d}; restrict sizes or max_edges"
            )
        full = (1 << d) - 1
        for picks in range(1, 1 << len(slots)):
            if cfg.max_edges is not None and bin(picks).count("1") > cfg.max_edges:
                continue
            edges = [slots[i] for i in range(len(slots)) if picks >> i & 1]
            union = 0
            for e in edges:
                union |= e
            if union != full:
                continue
            if any(
                e1 != e2 and e1 & e2 == e1 for e1 in edges for e2 in edges
            ):
                continue
            yield index, Hypergraph.of(d, edges)
            index += 1


def _minimally_non_packing(h: Hypergraph) -> bool:
    if konig(h):
        return False
    return all(konig(minor) for _, minor in distinct_proper_minors(h))


def _summarize(h: Hypergraph) -> dict:
    ideal = edge_ideal(h)
    beta, _ = matching_number(ideal)
    good = find_good_edge(ideal)
    summary = {
        "edges": [sorted(h.edge_vertices(e)) for e in h.edges],
        "cover_number": cover_number(h),
        "matching_number": beta,
        "konig": konig(h),
        "packing": packing(h)[0],
        "unmixed": is_unmixed(ideal),
        "good_edge": str(good) if good is not None else None,
    }
    verdict = ntf_verdict(ideal, default_bound(ideal))
    minors = all_proper_minors_ntf(ideal)
    onset_check = check_onset_at_matching_bound(
        ideal, verdict, minors.all_ntf, summary["packing"]
    )
    summary["onset"] = verdict.onset
    summary["minors_ntf"] = minors.all_ntf
    summary["onset_at_matching_bound"] = onset_check.passed
    return summary


def run_search(cfg: SearchConfig) -> Iterator[SearchHit]:
    """Stream matching hypergraphs with their analysis summaries."""
    start_after = int(cfg.resume) if cfg.resume is not None else -1
    seen: set[tuple[int, ...]] = set()
    emitted = 0
    for index, h in _candidates(cfg):
        if cfg.dedup == DEDUP_PERMUTATION:
            key = _permutation_canonical(h)
            if key in seen:
                continue
            seen.add(key)
        if index <= start_after:
            continue
        if cfg.predicate == PREDICATE_MIN_NON_PACKING:
            if not _minimally_non_packing(h):
                continue
        elif cfg.predicate == PREDICATE_ONSET_BOUND:
            ideal = edge_ideal(h)
            verdict = ntf_verdict(ideal, default_bound(ideal))
            minors = all_proper_minors_ntf(ideal)
            check = check_onset_at_matching_bound(
                ideal, verdict, minors.all_ntf, packing(h)[0]
            )
            if not (check.applicable and check.passed):
                continue
        else:  # ntf violation: an embedded prime shows up within the bound
            ideal = edge_ideal(h)
            if ntf_verdict(ideal, default_bound(ideal)).onset is None:
                continue
        yield SearchHit(index=index, hypergraph=h, summary=_summarize(h))
        emitted += 1
        if cfg.limit is not None and emitted >= cfg.limit:
            return
