"""Deterministic serialization: JSON (sorted keys), ';'-delimited CSV, DOT."""

from __future__ import annotations

import csv
import io
import json

from .castling import DescentTrace, TreeNode
from .classifier import Classification
from .kac import KacDecomposition, block_layout, sparsity_pattern
from .oracle import CrossCheckRow, OrbitRankReport
from .tuples import invariant_n

__all__ = [
    "CLASSIFICATION_COLUMNS",
    "CROSSCHECK_COLUMNS",
    "classification_csv",
    "crosscheck_csv",
    "emit",
    "to_json",
    "tree_dot",
    "tree_json",
]

CLASSIFICATION_COLUMNS = ("tuple", "N", "verdict", "rule", "minimal", "k", "trace_len")
CROSSCHECK_COLUMNS = ("tuple", "classifier_verdict", "oracle_verdict", "max_rank", "dim_v")


def to_json(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=";", lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def classification_csv(rows) -> str:
    return _csv(
        CLASSIFICATION_COLUMNS,
        (
            (
                str(r.input),
                r.n_value,
                r.verdict.value,
                r.rule.value,
                "" if r.minimal is None else str(r.minimal),
                "" if r.weierstrass_k is None else r.weierstrass_k,
                0 if r.trace is None else len(r.trace),
            )
            for r in rows
        ),
    )


def crosscheck_csv(rows) -> str:
    return _csv(
        CROSSCHECK_COLUMNS,
        ((str(r.tuple), r.classifier_verdict.value, r.oracle_verdict.value, r.max_rank, r.dim_v) for r in rows),
    )


def tree_json(root: TreeNode) -> str:
    return to_json(root.to_dict())


def tree_dot(root: TreeNode) -> str:
    lines = ["digraph castling {", "  node [shape=box];"]
    ids = {}
    for i, node in enumerate(root.walk()):
        ids[id(node)] = f"n{i}"
        lines.append(f'  n{i} [label="{node.tuple}\\nN={invariant_n(node.tuple)}"];')
    for node in root.walk():
        for child in node.children:
            s = child.step
            lines.append(f'  {ids[id(node)]} -> {ids[id(child)]} [label="j={s.replaced_index}, q={s.complement_product}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_text(trace: DescentTrace) -> str:
    out = [" -> ".join(str(t) for t in trace.chain())]
    for s in trace.steps:
        out.append(f"  {s.source}: replace a[{s.replaced_index}]={s.old_value} by {s.complement_product}-{s.old_value}={s.new_value}")
    return "\n".join(out) + "\n"


def kac_pattern(d: KacDecomposition) -> str:
    return "".join(f"{j} {k} {l}\n" for j, k, l in sparsity_pattern(block_layout(d)))


def oracle_text(r: OrbitRankReport) -> str:
    extra = f", confirm_prime={r.confirm_prime}" if r.confirm_prime else ""
    return (
        f"{r.verdict} (max_rank={r.max_rank}, dim_v={r.dim_v}, dim_g={r.dim_g}, "
        f"isotropy={r.isotropy_dim_estimate}, prime={r.prime}{extra}, trials={r.trials}, seed={r.seed})\n"
    )


def emit(report, fmt: str = "json") -> str:
    """Serialize any report object; raises ValueError for unsupported pairs."""
    if fmt == "json":
        if isinstance(report, list):
            return to_json({"schema_version": "1", "rows": [r.to_dict() for r in report]})
        return to_json(report)
    if fmt == "csv" and isinstance(report, list):
        if all(isinstance(r, Classification) for r in report):
            return classification_csv(report)
        if all(isinstance(r, CrossCheckRow) for r in report):
            return crosscheck_csv(report)
    if fmt == "csv" and isinstance(report, Classification):
        return classification_csv([report])
    if fmt == "dot" and isinstance(report, TreeNode):
        return tree_dot(report)
    if fmt == "text":
        if isinstance(report, Classification):
            return report.summary() + "\n"
        if isinstance(report, DescentTrace):
            return trace_text(report)
        if isinstance(report, OrbitRankReport):
            return oracle_text(report)
    if fmt == "pattern" and isinstance(report, KacDecomposition):
        return kac_pattern(report)
    raise ValueError(f"cannot emit {type(report).__name__} as {fmt!r}")
