"""Brute-force bond lattice: connected set partitions, Moebius function, Rota's formula.

Everything here enumerates partitions explicitly and serves as the reference
oracle for the faster recursive and splitting algorithms.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import GraphError, ResourceCapError
from .graph import Graph, format_label
from .partition import SetPartition, bell, rgs_codes
from .poly import BiPoly, UniPoly

__all__ = [
    "BRUTE_CAP",
    "BondLattice",
    "iter_connected_codes",
    "enumerate_connected_partitions",
    "q_brute",
    "q_brute_xy",
    "mobius",
    "chromatic_via_rota",
    "chromatic_deletion_contraction",
]

BRUTE_CAP = 12


def _check_cap(n: int, cap: int | None) -> None:
    cap = BRUTE_CAP if cap is None else cap
    if n > cap:
        raise ResourceCapError(
            f"brute-force enumeration on {n} vertices exceeds the cap of {cap} "
            f"(B({n}) = {bell(n)} partitions)"
        )


def _connected_masks(masks: tuple[int, ...]) -> set[int]:
    """All nonempty vertex bitmasks inducing a connected subgraph."""
    n = len(masks)
    out = set()
    # grow from each lowest vertex so every connected set is found once
    for start in range(n):
        allowed_hi = ~((1 << start) - 1)
        stack = [1 << start]
        seen = {1 << start}
        while stack:
            s = stack.pop()
            out.add(s)
            frontier = 0
            t = s
            while t:
                low = t & -t
                frontier |= masks[low.bit_length() - 1]
                t ^= low
            frontier &= allowed_hi & ~s
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt = s | low
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return out


def iter_connected_codes(g: Graph, cap: int | None = None) -> Iterator[tuple[list[int], list[int]]]:
    """Yield ``(codes, block_masks)`` for every connected set partition of ``g``.

    ``codes`` is a restricted-growth string over ``g.vertices``; the list is
    shared between iterations.
    """
    _check_cap(g.n, cap)
    conn = _connected_masks(g.masks())
    n = g.n
    for codes in rgs_codes(n):
        k = max(codes) + 1 if codes else 0
        blocks = [0] * k
        for i, c in enumerate(codes):
            blocks[c] |= 1 << i
        if all(b in conn for b in blocks):
            yield codes, blocks


def _intra_edges(masks: tuple[int, ...], block: int) -> int:
    total = 0
    t = block
    while t:
        low = t & -t
        t ^= low
        total += bin(masks[low.bit_length() - 1] & block).count("1")
    return total // 2


class BondLattice:
    """The connected set partitions of a graph ordered by refinement."""

    def __init__(self, graph: Graph, cap: int | None = None):
        self.graph = graph
        self.elements: list[SetPartition] = []
        self._blocks: list[tuple[int, ...]] = []
        for codes, blocks in iter_connected_codes(graph, cap):
            self.elements.append(SetPartition(graph.vertices, codes))
            self._blocks.append(tuple(blocks))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self._owner: list[list[int]] = []
        for blocks in self._blocks:
            owner = [0] * graph.n
            for b in blocks:
                t = b
                while t:
                    low = t & -t
                    t ^= low
                    owner[low.bit_length() - 1] = b
            self._owner.append(owner)
        self._mobius_rows: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, pi) -> bool:
        return pi in self._index

    def index(self, pi: SetPartition) -> int:
        try:
            return self._index[pi.reorder(self.graph.vertices)]
        except Exception:
            raise GraphError(f"{pi} is not a connected set partition of the graph") from None

    def rank_size(self, i: int) -> int:
        """Number of blocks of element ``i``."""
        return len(self._blocks[i])

    def leq_index(self, i: int, j: int) -> bool:
        owner = self._owner[j]
        for b in self._blocks[i]:
            c = owner[(b & -b).bit_length() - 1]
            if b & ~c:
                return False
        return True

    def leq(self, pi: SetPartition, sigma: SetPartition) -> bool:
        return self.leq_index(self.index(pi), self.index(sigma))

    @property
    def bottom(self) -> SetPartition:
        return SetPartition.finest(self.graph.vertices)

    @property
    def top(self) -> SetPartition | None:
        """The one-block partition, or None when the graph is disconnected."""
        one = SetPartition.coarsest(self.graph.vertices)
        return one if one in self._index else None

    def atoms(self) -> list[SetPartition]:
        n = self.graph.n
        return [p for i, p in enumerate(self.elements) if self.rank_size(i) == n - 1]

    def intra_edges(self, i: int) -> int:
        masks = self.graph.masks()
        return sum(_intra_edges(masks, b) for b in self._blocks[i])

    def mobius_row(self, i: int) -> dict[int, int]:
        """``{j: mu(i, j)}`` for every ``j`` above ``i``."""
        row = self._mobius_rows.get(i)
        if row is not None:
            return row
        above = [j for j in range(len(self)) if self.leq_index(i, j)]
        above.sort(key=lambda j: -self.rank_size(j))
        row = {}
        for j in above:
            if j == i:
                row[j] = 1
                continue
            row[j] = -sum(mu for k, mu in row.items() if self.leq_index(k, j))
        self._mobius_rows[i] = row
        return row

    def mobius(self, pi: SetPartition, sigma: SetPartition) -> int:
        i, j = self.index(pi), self.index(sigma)
        if not self.leq_index(i, j):
            raise GraphError(f"{pi} is not below {sigma}")
        return self.mobius_row(i)[j]

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations ``(i, j)``: ``i < j`` with nothing strictly between."""
        out = []
        for j in range(len(self)):
            below = [i for i in range(len(self)) if i != j and self.leq_index(i, j)]
            for i in below:
                if not any(k != i and self.leq_index(i, k) for k in below):
                    out.append((i, j))
        return out

    def to_dot(self, max_n: int = 6) -> str:
        """Hasse diagram in Graphviz DOT syntax."""
        if self.graph.n > max_n:
            raise ResourceCapError(f"DOT export is limited to {max_n} vertices")
        lines = ["digraph bond_lattice {", "  rankdir=BT;"]
        for i, p in enumerate(self.elements):
            text = "|".join("".join(format_label(v) for v in b) for b in p.blocks)
            lines.append(f'  p{i} [label="{text}"];')
        for i, j in self.covers():
            lines.append(f"  p{i} -> p{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_connected_partitions(g: Graph, cap: int | None = None) -> BondLattice:
    return BondLattice(g, cap)


def q_brute(g: Graph, cap: int | None = None) -> UniPoly:
    """Partition polynomial by explicit enumeration."""
    counts = [0] * (g.n + 1)
    for _, blocks in iter_connected_codes(g, cap):
        counts[len(blocks)] += 1
    return UniPoly(counts)


def q_brute_xy(g: Graph, cap: int | None = None) -> BiPoly:
    """Bivariate minimal cut polynomial by explicit enumeration; y counts intra-block edges."""
    masks = g.masks()
    terms: dict[tuple[int, int], int] = {}
    for _, blocks in iter_connected_codes(g, cap):
        key = (len(blocks), sum(_intra_edges(masks, b) for b in blocks))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


def mobius(lattice: BondLattice, pi: SetPartition, sigma: SetPartition) -> int:
    return lattice.mobius(pi, sigma)


def chromatic_via_rota(g: Graph, cap: int | None = None) -> UniPoly:
    """Chromatic polynomial as the Moebius-weighted rank sum over the bond lattice."""
    lat = BondLattice(g, cap)
    bottom = lat.index(lat.bottom)
    coeffs = [0] * (g.n + 1)
    for j, mu in lat.mobius_row(bottom).items():
        coeffs[lat.rank_size(j)] += mu
    return UniPoly(coeffs)


@lru_cache(maxsize=200_000)
def _dc(n: int, edges: tuple[tuple[int, int], ...]) -> UniPoly:
    if not edges:
        return UniPoly.monomial(n)
    (u, v), rest = edges[-1], edges[:-1]
    deleted = _dc(n, rest)
    # contract v into u, then renumber so vertices stay 0..n-2
    def ren(w):
        w = u if w == v else w
        return w - 1 if w > v else w
    merged = set()
    for a, b in rest:
        a, b = ren(a), ren(b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    contracted = _dc(n - 1, tuple(sorted(merged)))
    return deleted - contracted


def chromatic_deletion_contraction(g: Graph) -> UniPoly:
    """Chromatic polynomial by the deletion-contraction recurrence P(G) = P(G-e) - P(G/e)."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = tuple(sorted((idx[u], idx[w]) for u, w in g.edges))
    return _dc(g.n, edges)
