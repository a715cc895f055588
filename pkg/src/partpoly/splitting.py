"""Splitting a graph along a separating vertex set and gluing T-polynomial tables.

For an interface ``X`` the table entry ``T(beta, gamma)`` is the generating
polynomial of connected set partitions ``pi`` of ``G_X`` (``G`` with ``X``
turned into a clique) such that ``pi`` induces ``beta`` on ``X`` and the
component refinement of ``pi`` in ``G`` itself induces ``gamma`` on ``X``.
The clique edges only provide connectivity; they are never counted as
intra-block edges and never used when refining into components.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphError, InvariantViolation, PartitionError, ResourceCapError
from .graph import Graph, _component_lists, cliqueify, delete, format_label
from .lattice import iter_connected_codes
from .partition import SetPartition, enumerate_partitions, join
from .poly import BiPoly, UniPoly

__all__ = [
    "INTERFACE_CAP",
    "Splitting",
    "TTable",
    "split_graph",
    "find_separator",
    "t_table",
    "combine_t",
    "q_by_splitting",
    "connected_partitions_inducing",
]

INTERFACE_CAP = 8


@dataclass(frozen=True)
class Splitting:
    """Edge-disjoint subgraphs ``g1``, ``g2`` sharing exactly the vertices ``interface``."""

    g1: Graph
    g2: Graph
    interface: tuple

    def check(self, g: Graph) -> None:
        v1, v2 = set(self.g1.vertices), set(self.g2.vertices)
        e1 = {frozenset(e) for e in self.g1.edges}
        e2 = {frozenset(e) for e in self.g2.edges}
        ok = (
            v1 & v2 == set(self.interface)
            and v1 | v2 == set(g.vertices)
            and not e1 & e2
            and e1 | e2 == {frozenset(e) for e in g.edges}
        )
        if not ok:
            raise InvariantViolation("not a splitting of the given graph")


def split_graph(g: Graph, interface: Iterable) -> Splitting:
    """Split ``g`` at ``interface``; components of ``G - X`` are dealt to the smaller side.

    Edges inside the interface go to ``g1``. If ``G - X`` is connected the
    split is trivial: ``g2`` is the interface without edges.
    """
    x = g.vertex_set(interface)
    if len(x) == g.n and g.n > 0:
        raise GraphError("the interface contains every vertex; no proper split exists")
    xs = set(x)
    rest = delete(g, x)
    side1: set = set()
    side2: set = set()
    for comp in _component_lists(rest):
        if len(side2) < len(side1):
            side2.update(comp)
        else:
            side1.update(comp)
    v1 = [v for v in g.vertices if v in xs or v in side1]
    v2 = [v for v in g.vertices if v in xs or v in side2]
    g1 = g.induced(v1)
    g2_full = g.induced(v2)
    g2 = Graph(g2_full.vertices, [(u, w) for u, w in g2_full.edges if not (u in xs and w in xs)])
    return Splitting(g1, g2, tuple(x))


def find_separator(g: Graph, max_size: int = 3, seed: int | None = None) -> tuple:
    """Smallest vertex set (up to ``max_size``) whose removal disconnects ``g``.

    Among separators of the smallest size the most balanced split wins; ties
    go to the lexicographically first set, or a seeded random choice when
    ``seed`` is given. Graphs with no such separator get their first vertex
    (or the empty set when ``n <= 1``), which yields a trivial split.
    """
    best: list[tuple] = []
    best_score = None
    for size in range(0, min(max_size, g.n - 1) + 1):
        for idx in combinations(range(g.n), size):
            x = [g.vertices[i] for i in idx]
            rest = delete(g, x)
            if rest.n == 0 or rest.is_connected():
                continue
            sp = split_graph(g, x)
            score = max(sp.g1.n, sp.g2.n)
            if best_score is None or score < best_score:
                best, best_score = [tuple(x)], score
            elif score == best_score:
                best.append(tuple(x))
        if best:
            break
    if not best:
        return tuple(g.vertices[:1]) if g.n > 1 else ()
    if seed is None:
        return best[0]
    return random.Random(seed).choice(best)


class TTable:
    """Map ``(beta, gamma) -> polynomial`` over the partitions of an interface; absent means zero."""

    def __init__(self, interface: Iterable, entries: dict | None = None, bivariate: bool = False):
        self.interface = tuple(interface)
        self.bivariate = bivariate
        self.entries: dict[tuple[SetPartition, SetPartition], object] = {}
        for (beta, gamma), p in (entries or {}).items():
            if not p.is_zero():
                self.entries[(beta, gamma)] = p

    def zero(self):
        return BiPoly() if self.bivariate else UniPoly()

    def __getitem__(self, key):
        beta, gamma = key
        beta, gamma = beta.reorder(self.interface), gamma.reorder(self.interface)
        return self.entries.get((beta, gamma), self.zero())

    def row(self, beta: SetPartition) -> dict[SetPartition, object]:
        beta = beta.reorder(self.interface)
        return {g: p for (b, g), p in self.entries.items() if b == beta}

    def rows(self) -> dict[SetPartition, dict[SetPartition, object]]:
        out: dict = {}
        for (b, g), p in self.entries.items():
            out.setdefault(b, {})[g] = p
        return out

    def diagonal_sum(self):
        total = self.zero()
        for (b, g), p in self.entries.items():
            if b == g:
                total = total + p
        return total

    def reorder(self, interface) -> "TTable":
        if tuple(interface) == self.interface:
            return self
        return TTable(
            interface,
            {(b.reorder(interface), g.reorder(interface)): p for (b, g), p in self.entries.items()},
            self.bivariate,
        )

    def __eq__(self, other):
        if not isinstance(other, TTable):
            return NotImplemented
        if set(self.interface) != set(other.interface) or len(self.interface) != len(other.interface):
            return False
        return self.entries == other.reorder(self.interface).entries

    def __repr__(self):
        x = ",".join(format_label(v) for v in self.interface)
        lines = [f"TTable(X={{{x}}}, {len(self.entries)} entries)"]
        for (b, g), p in self.entries.items():
            lines.append(f"  beta={b} gamma={g}: {p}")
        return "\n".join(lines)


def _check_interface(g: Graph, x) -> list:
    xs = g.vertex_set(x)
    if len(xs) > INTERFACE_CAP:
        raise ResourceCapError(f"interface of size {len(xs)} exceeds the cap of {INTERFACE_CAP}")
    return xs


def _component_codes(masks, blocks, n) -> list[int]:
    """Vertex -> component id after splitting every block into its components under ``masks``."""
    code = [-1] * n
    nxt = 0
    for b in blocks:
        rest = b
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                f = frontier & -frontier
                frontier ^= f
                new = masks[f.bit_length() - 1] & b & ~comp
                comp |= new
                frontier |= new
            rest &= ~comp
            t = comp
            while t:
                f = t & -t
                t ^= f
                code[f.bit_length() - 1] = nxt
            nxt += 1
    return code


def t_table(g: Graph, interface: Iterable, bivariate: bool = False, cap: int | None = None) -> TTable:
    """Tabulate ``T(G, beta, gamma)`` for every pair of interface partitions."""
    x = _check_interface(g, interface)
    gx = cliqueify(g, x)
    xpos = [g.index(v) for v in x]
    masks = g.masks()
    cache: dict[tuple, SetPartition] = {}

    def part(codes):
        key = tuple(codes)
        p = cache.get(key)
        if p is None:
            p = cache[key] = SetPartition(x, key)
        return p

    acc: dict[tuple, dict] = {}
    for codes, blocks in iter_connected_codes(gx, cap):
        beta = part([codes[i] for i in xpos])
        comp = _component_codes(masks, blocks, g.n)
        gamma = part([comp[i] for i in xpos])
        if bivariate:
            intra = 0
            for b in blocks:
                t = b
                while t:
                    f = t & -t
                    t ^= f
                    intra += bin(masks[f.bit_length() - 1] & b).count("1")
            key = (len(blocks), intra // 2)
        else:
            key = len(blocks)
        cell = acc.setdefault((beta, gamma), {})
        cell[key] = cell.get(key, 0) + 1
    entries = {}
    for k, cell in acc.items():
        if bivariate:
            entries[k] = BiPoly(cell)
        else:
            entries[k] = UniPoly(cell.get(i, 0) for i in range(max(cell) + 1))
    return TTable(x, entries, bivariate)


def combine_t(t1: TTable, t2: TTable) -> TTable:
    """Glue two tables over the same interface.

    ``T(beta, gamma) = x**-|beta| * sum over gamma1 v gamma2 = gamma of T1(beta, gamma1) T2(beta, gamma2)``.
    """
    if set(t1.interface) != set(t2.interface) or len(t1.interface) != len(t2.interface):
        raise PartitionError("tables have different interfaces")
    if t1.bivariate != t2.bivariate:
        raise PartitionError("cannot combine a univariate with a bivariate table")
    t2 = t2.reorder(t1.interface)
    rows2 = t2.rows()
    joins: dict[tuple, SetPartition] = {}
    entries: dict = {}
    for beta, row1 in t1.rows().items():
        row2 = rows2.get(beta)
        if not row2:
            continue
        acc: dict[SetPartition, object] = {}
        for g1, p1 in row1.items():
            for g2, p2 in row2.items():
                gamma = joins.get((g1, g2))
                if gamma is None:
                    gamma = joins[(g1, g2)] = join(g1, g2)
                prod = p1 * p2
                acc[gamma] = acc[gamma] + prod if gamma in acc else prod
        for gamma, p in acc.items():
            entries[(beta, gamma)] = p.divide_by_power(len(beta))
    return TTable(t1.interface, entries, t1.bivariate)


def _is_clique(g: Graph, x) -> bool:
    return all(g.has_edge(u, w) for u, w in combinations(x, 2))


def q_by_splitting(g: Graph, interface="auto", bivariate: bool = False, seed: int | None = None,
                   cap: int | None = None):
    """Partition polynomial (or its bivariate form) assembled from the two sides of a splitting.

    ``interface`` is an iterable of vertices or ``"auto"`` for :func:`find_separator`.
    """
    if isinstance(interface, str) and interface == "auto":
        interface = find_separator(g, seed=seed)
    sp = split_graph(g, interface)
    x = sp.interface
    t1 = t_table(sp.g1, x, bivariate, cap)
    t2 = t_table(sp.g2, x, bivariate, cap)
    total = t1.zero()
    if _is_clique(g, x):
        # g1 owns the clique on X, so its table is diagonal and every gamma2 joins to beta
        rows2 = t2.rows()
        for (beta, gamma), p1 in t1.entries.items():
            if beta != gamma:
                raise InvariantViolation("off-diagonal entry on a complete interface")
            row_sum = t2.zero()
            for p2 in rows2.get(beta, {}).values():
                row_sum = row_sum + p2
            total = total + (p1 * row_sum).divide_by_power(len(beta))
        return total
    return combine_t(t1, t2).diagonal_sum()


def connected_partitions_inducing(g: Graph, interface: Iterable, beta: SetPartition | None = None,
                                  cap: int | None = None) -> Iterator[SetPartition]:
    """Connected set partitions of ``G_X`` inducing ``beta`` on ``X`` (all of them if ``beta`` is None)."""
    x = g.vertex_set(interface)
    if beta is not None:
        beta = beta.reorder(x)
    gx = cliqueify(g, x)
    xpos = [g.index(v) for v in x]
    for codes, _ in iter_connected_codes(gx, cap):
        if beta is None or SetPartition(x, [codes[i] for i in xpos]) == beta:
            yield SetPartition(g.vertices, codes)


def interface_partitions(interface: Iterable) -> list[SetPartition]:
    return list(enumerate_partitions(interface))
