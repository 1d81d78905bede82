"""JSON interchange for hypergraphs and result records.

The hypergraph wire format is {"n": int, "r": int, "edges": [[int, ...], ...]};
edges are emitted in canonical (sorted) order, readers accept any order.
Floats go through repr, which round-trips bit-for-bit.
"""

from __future__ import annotations

import json

from .hcore import EditDelta, Hypergraph, Partition, ValidationError

__all__ = [
    "hypergraph_to_dict",
    "hypergraph_from_dict",
    "dumps",
    "loads_hypergraph",
    "solver_result_to_dict",
    "search_record_to_dict",
    "stability_report_to_dict",
]


def hypergraph_to_dict(H: Hypergraph) -> dict:
    return {"n": H.n, "r": H.r, "edges": [list(e) for e in H.edges]}


def hypergraph_from_dict(data: dict) -> Hypergraph:
    try:
        n = int(data["n"])
        r = int(data["r"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"hypergraph JSON needs n, r, edges: {exc}") from exc
    return Hypergraph(n, r, edges)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def loads_hypergraph(text: str) -> Hypergraph:
    return hypergraph_from_dict(json.loads(text))


def solver_result_to_dict(result) -> dict:
    return {
        "lambda": result.lambda_estimate,
        "vector": list(result.vector.values),
        "residual": result.residual,
        "iterations": result.iterations,
        "status": result.status,
    }


def search_record_to_dict(record) -> dict:
    out = {
        "n": record.n,
        "r": record.r,
        "pattern": record.pattern,
        "objective": record.objective,
        "best_value": record.best_value,
        "witnesses": [hypergraph_to_dict(w) for w in record.witnesses],
        "explored_count": record.explored_count,
        "mode": record.mode,
    }
    if record.p is not None:
        out["p"] = record.p
    if record.witness_status:
        out["witness_status"] = list(record.witness_status)
    if record.turan_reference is not None:
        out["turan_reference"] = record.turan_reference
    if record.trace:
        out["trace"] = [[move, value] for move, value in record.trace]
    return out


def stability_report_to_dict(report) -> dict:
    return {
        "k": report.k,
        "assignment": list(report.best_partition.assignment),
        "score": report.score,
        "missing": report.missing,
        "bad": report.bad,
        "codegree_threshold": report.codegree_threshold,
        "sparse_pairs": sorted(list(p) for p in report.sparse_pairs),
        "heavy_sparse_vertices": sorted(report.heavy_sparse_vertices),
        "heavy_missing_vertices": sorted(report.heavy_missing_vertices),
        "edit_distance_to_turan": report.edit_distance_to_turan,
        "epsilon": report.epsilon,
        "sparse_threshold": report.sparse_threshold,
        "missing_threshold": report.missing_threshold,
    }
