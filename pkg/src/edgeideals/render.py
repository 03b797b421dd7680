"""Serialization of analysis reports and core values: JSON dicts and text.

JSON output is deterministic: all sets are emitted in their canonical orders
and no floats appear anywhere, so byte-identical reruns are expected.  The
report layout is described by ``schema/analysis_report.schema.json``.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Sequence

from .analysis import AnalysisReport, CheckVerdict, NtfVerdict
from .hypergraphs import Hypergraph, MinorSpec
from .monomials import MonomialIdeal, MonomialPrime, var_name

SCHEMA_VERSION = "1"


def schema_text() -> str:
    return (
        resources.files("edgeideals")
        .joinpath("schema/analysis_report.schema.json")
        .read_text()
    )


def prime_json(p: MonomialPrime, names: Sequence[str] | None = None) -> list[str]:
    return [var_name(i, names) for i in p.vars]


def ideal_json(ideal: MonomialIdeal, names: Sequence[str] | None = None) -> dict:
    return {
        "ring_dim": ideal.ring_dim,
        "generators": [g.text(names) for g in ideal.gens],
    }


def hypergraph_json(h: Hypergraph, names: Sequence[str] | None = None) -> dict:
    return {
        "n_vertices": h.n_vertices,
        "edges": [[var_name(v, names) for v in h.edge_vertices(e)] for e in h.edges],
    }


def minor_spec_json(spec: MinorSpec | None, names: Sequence[str] | None = None) -> dict | None:
    if spec is None:
        return None
    return spec.describe(names)


def _ntf_json(v: NtfVerdict, names: Sequence[str] | None) -> dict:
    return {
        "bound_used": v.bound_used,
        "onset": v.onset,
        "certified_ntf_up_to": v.certified_ntf_up_to,
        "per_power": [
            {
                "t": row.t,
                "associated_primes": [prime_json(p, names) for p in row.ass],
                "embedded": [prime_json(p, names) for p in row.embedded],
                "symbolic_equal": row.symbolic_equal,
            }
            for row in v.per_power
        ],
    }


def _check_json(c: CheckVerdict) -> dict:
    return {
        "name": c.name,
        "applicable": c.applicable,
        "passed": c.passed,
        "conditional": c.conditional,
        "failed_precondition": c.failed_precondition,
        "details": c.details,
    }


def report_json(report: AnalysisReport, names: Sequence[str] | None = None) -> dict:
    names = names or report.names
    return {
        "schema_version": SCHEMA_VERSION,
        "ring_dim": report.ring_dim,
        "ideal": report.ideal.text(names),
        "generators": [g.text(names) for g in report.ideal.gens],
        "effective_dim": report.effective_dim,
        "isolated_vertices": [var_name(i, names) for i in report.isolated],
        "connected_components": report.component_count,
        "cover_number": report.cover_number,
        "matching_number": report.matching_number,
        "matching_witness": [m.text(names) for m in report.matching_witness],
        "unmixed": report.unmixed,
        "konig": report.konig,
        "packing": report.packing,
        "packing_failure": minor_spec_json(report.packing_failure, names),
        "good_edge": report.good_edge.text(names) if report.good_edge else None,
        "minors": (
            None
            if report.minors is None
            else {
                "all_ntf": report.minors.all_ntf,
                "failing_minor": minor_spec_json(report.minors.failing_minor, names),
                "minors_checked": report.minors.minors_checked,
                "bound_cap": report.minors.bound_cap,
            }
        ),
        "ntf": None if report.ntf is None else _ntf_json(report.ntf, names),
        "stabilization": {
            "stable_from": report.stable_from,
            "stable_set": [prime_json(p, names) for p in report.stable_set],
        },
        "checks": [_check_json(c) for c in report.checks],
        "errors": dict(sorted(report.errors.items())),
    }


def report_to_json_text(report: AnalysisReport, names: Sequence[str] | None = None) -> str:
    return json.dumps(report_json(report, names), indent=2, sort_keys=False)


def _fmt_primes(primes, names) -> str:
    return " ".join(p.text(names) for p in primes) if primes else "-"


def report_text(report: AnalysisReport, names: Sequence[str] | None = None) -> str:
    """Human-readable report; one block of invariants, one table of powers."""
    names = names or report.names
    lines = []
    lines.append(f"ideal: {report.ideal.text(names)}   [d={report.ring_dim}]")
    lines.append(
        f"cover number: {report.cover_number}   matching number: {report.matching_number}"
        f"   witness: {' '.join(m.text(names) for m in report.matching_witness)}"
    )
    qual = []
    qual.append(f"unmixed: {'yes' if report.unmixed else 'no'}")
    qual.append(f"konig: {'yes' if report.konig else 'no'}")
    if report.packing:
        qual.append("packing: yes")
    else:
        where = report.packing_failure
        at = "itself" if where and where.is_identity() else str(minor_spec_json(where, names))
        qual.append(f"packing: no (fails at: {at})")
    lines.append("   ".join(qual))
    lines.append(
        f"good edge: {report.good_edge.text(names) if report.good_edge else 'none'}"
    )
    if report.minors is not None:
        state = "clean" if report.minors.all_ntf else "FAILED"
        lines.append(
            f"proper minors: {state} up to their own bounds"
            f" ({report.minors.minors_checked} distinct checked)"
        )
    if report.ntf is not None:
        v = report.ntf
        lines.append(f"bound scanned: {v.bound_used}")
        lines.append(" t | associated primes | embedded | power = symbolic")
        for row in v.per_power:
            lines.append(
                f" {row.t} | {_fmt_primes(row.ass, names)}"
                f" | {_fmt_primes(row.embedded, names)}"
                f" | {'yes' if row.symbolic_equal else 'no'}"
            )
        onset = "none observed" if v.onset is None else str(v.onset)
        lines.append(f"onset: {onset}   certified clean up to: {v.certified_ntf_up_to}")
    if report.stable_from is not None and report.ntf is not None:
        lines.append(
            f"observed stabilization: Ass constant from t={report.stable_from}"
            f" through {report.ntf.bound_used}"
        )
    lines.append("checks:")
    for c in report.checks:
        if not c.applicable:
            status = f"not applicable ({c.failed_precondition})"
        elif c.passed:
            status = "PASS" + (" [conditional]" if c.conditional else "")
        else:
            status = "FAIL"
        lines.append(f"  {c.name}: {status}")
    for section, message in sorted(report.errors.items()):
        lines.append(f"budget error in {section}: {message}")
    return "\n".join(lines)
