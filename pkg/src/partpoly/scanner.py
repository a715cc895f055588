"""Corpus scans for partition- and chromatically-equivalent graph pairs."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvariantViolation
from .formats import iter_graph6
from .graph import Graph
from .lattice import chromatic_deletion_contraction, chromatic_via_rota
from .poly import UniPoly
from .recurrences import q_auto

__all__ = ["ScanRecord", "compute_record", "scan", "MODES", "summarize"]

log = logging.getLogger(__name__)

MODES = ("chrom-not-partition", "partition-not-chrom", "all-classes")
ROTA_SAMPLE_EVERY = 100


@dataclass(frozen=True)
class ScanRecord:
    graph_id: int
    n: int
    m: int
    q: UniPoly
    p: UniPoly
    g6: str = ""
    line: int = 0

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "line": self.line,
            "g6": self.g6,
            "n": self.n,
            "m": self.m,
            "q": str(self.q),
            "p": str(self.p),
        }


def compute_record(args) -> ScanRecord:
    graph_id, line, g6, g, strategy = args
    q = q_auto(g, strategy)
    p = chromatic_deletion_contraction(g)
    if graph_id % ROTA_SAMPLE_EVERY == 0 and chromatic_via_rota(g) != p:
        raise InvariantViolation(f"Rota and deletion-contraction disagree on graph {graph_id} ({g6})")
    if q.degree != g.n or p.degree != g.n:
        raise InvariantViolation(f"polynomial degree differs from n on graph {graph_id}")
    return ScanRecord(graph_id, g.n, g.m, q, p, g6, line)


def _key(p: UniPoly) -> tuple[str, ...]:
    return tuple(str(a) for a in p.coeffs)


def _group(records: list[ScanRecord], attr: str) -> list[list[ScanRecord]]:
    groups: dict[tuple, list[ScanRecord]] = {}
    for r in records:
        groups.setdefault(_key(getattr(r, attr)), []).append(r)
    return [g for g in groups.values() if len(g) > 1]


def _pairs(records, same: str, differ: str) -> list[dict]:
    out = []
    for cls in _group(records, same):
        for a, b in combinations(cls, 2):
            if getattr(a, differ) != getattr(b, differ):
                out.append(
                    {
                        "graphs": [a.graph_id, b.graph_id],
                        "g6": [a.g6, b.g6],
                        same: str(getattr(a, same)),
                        differ: [str(getattr(a, differ)), str(getattr(b, differ))],
                    }
                )
    return out


def scan(corpus: Iterable[bytes | str], mode: str = "all-classes", jobs: int = 1,
         strategy: str = "auto") -> dict:
    """Compute (Q, P) for every graph6 line and report equivalence classes or pairs.

    Unparseable lines are reported under ``errors`` and skipped. Output order
    follows corpus order regardless of ``jobs``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown scan mode {mode!r}; choose from {', '.join(MODES)}")
    errors = []
    tasks = []
    for lineno, raw, item in iter_graph6(corpus):
        if isinstance(item, Graph):
            tasks.append((len(tasks), lineno, raw, item, strategy))
        else:
            errors.append({"line": lineno, "text": raw, "error": str(item)})
            log.warning("line %d: %s", lineno, item)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(compute_record, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        records = [compute_record(t) for t in tasks]

    report: dict = {"mode": mode, "graphs": len(records), "errors": errors, "classes": [], "pairs": []}
    if mode == "chrom-not-partition":
        report["pairs"] = _pairs(records, "p", "q")
    elif mode == "partition-not-chrom":
        report["pairs"] = _pairs(records, "q", "p")
    else:
        for attr in ("q", "p"):
            for cls in _group(records, attr):
                report["classes"].append(
                    {"by": attr, attr: str(getattr(cls[0], attr)), "graphs": [r.graph_id for r in cls]}
                )
        report["pairs"] = _pairs(records, "p", "q") + _pairs(records, "q", "p")
    report["records"] = [r.to_dict() for r in records]
    return report


def summarize(report: dict) -> str:
    lines = [f"mode: {report['mode']}", f"graphs scanned: {report['graphs']}"]
    if report["errors"]:
        lines.append(f"unparseable lines: {len(report['errors'])}")
    if report["classes"]:
        lines.append(f"classes with more than one graph: {len(report['classes'])}")
    lines.append(f"pairs: {len(report['pairs'])}")
    for pair in report["pairs"]:
        same = "p" if "p" in pair and isinstance(pair["p"], str) else "q"
        differ = "q" if same == "p" else "p"
        a, b = pair["graphs"]
        lines.append(f"  #{a} {pair['g6'][0]}  #{b} {pair['g6'][1]}")
        lines.append(f"    {same.upper()} = {pair[same]}")
        lines.append(f"    {differ.upper()}: {pair[differ][0]}  vs  {pair[differ][1]}")
    return "\n".join(lines)
