"""Recursive computations of the partition polynomial and its bivariate extension.

Each public function is an independent route to the same polynomial. The
vertex-decomposition and neighbourhood inclusion-exclusion recursions work on
tuples of neighbourhood bitmasks internally and memoize on those tuples, so
identical (position-labeled) subgraphs are computed once.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .errors import GraphError
from .graph import Graph, bridges, components, contract, delete, extract_matching, format_label
from .lattice import q_brute, q_brute_xy
from .poly import BiPoly, UniPoly

__all__ = [
    "reduce_pendant",
    "q_bridge_split",
    "q_vertex_decomposition",
    "q_vertex_decomposition_xy",
    "q_neighborhood_ie",
    "q_minus_cut",
    "q_minus_matching",
    "q_auto",
    "q_auto_xy",
    "STRATEGIES",
]

STRATEGIES = ("brute", "decomp", "ie", "auto")

Masks = tuple  # tuple[int, ...]: neighbourhood bitmask per vertex position


def _ring(bivariate: bool):
    if bivariate:
        return BiPoly.one(), BiPoly.x(), BiPoly.y()
    return UniPoly.one(), UniPoly.x(), UniPoly.one()


def _popcount(v: int) -> int:
    return bin(v).count("1")


def _bits(v: int):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def _drop(masks: Masks, drop: int) -> Masks:
    """Delete the vertices in bitmask ``drop`` and renumber the rest."""
    keep = [i for i in range(len(masks)) if not (drop >> i) & 1]
    new_pos = {old: new for new, old in enumerate(keep)}
    out = []
    for i in keep:
        m = masks[i] & ~drop
        nm = 0
        for j in _bits(m):
            nm |= 1 << new_pos[j]
        out.append(nm)
    return tuple(out)


def _identify(masks: Masks, group: int) -> Masks:
    """Merge the vertices of ``group`` into its lowest member; parallel edges collapse."""
    r = (group & -group).bit_length() - 1
    merged = list(masks)
    nb = 0
    for j in _bits(group):
        nb |= masks[j]
    merged[r] = nb & ~group
    for i in range(len(masks)):
        if not (group >> i) & 1 and masks[i] & group:
            merged[i] = (masks[i] & ~group) | (1 << r)
    return _drop(tuple(merged), group & ~(1 << r))


def _connected_sets_containing(masks: Masks, within: int, v: int):
    """Connected vertex sets ``W`` with ``v`` in ``W`` and ``W`` inside ``within``."""
    start = 1 << v
    seen = {start}
    stack = [start]
    while stack:
        s = stack.pop()
        yield s
        frontier = 0
        for j in _bits(s):
            frontier |= masks[j]
        frontier &= within & ~s
        for j in _bits(frontier):
            nxt = s | (1 << j)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)


def _intra(masks: Masks, block: int) -> int:
    return sum(_popcount(masks[j] & block) for j in _bits(block)) // 2


# -- vertex decomposition -------------------------------------------------

def _decomp(masks: Masks, first: int, bivariate: bool):
    one, x, y = _ring(bivariate)
    memo: dict[int, object] = {0: one}

    def rec(s: int, v: int | None = None):
        if v is None and s in memo:
            return memo[s]
        if v is None:
            v = (s & -s).bit_length() - 1
        total = one * 0
        for w in _connected_sets_containing(masks, s, v):
            term = rec(s & ~w)
            if bivariate:
                term = term * y ** _intra(masks, w)
            total = total + term
        value = x * total
        memo.setdefault(s, value)
        return value

    full = (1 << len(masks)) - 1
    return rec(full, first)


def q_vertex_decomposition(g: Graph, v=None) -> UniPoly:
    """Sum over connected vertex sets ``W`` containing ``v`` of ``x * Q(G - W)``.

    ``v`` defaults to the first vertex; recursive calls use the first
    remaining vertex.
    """
    if g.n == 0:
        return UniPoly.one()
    i = 0 if v is None else g.index(v)
    return _decomp(g.masks(), i, False)


def q_vertex_decomposition_xy(g: Graph, v=None) -> BiPoly:
    """Bivariate decomposition; each removed set ``W`` carries ``y**|E(G[W])|``."""
    if g.n == 0:
        return BiPoly.one()
    i = 0 if v is None else g.index(v)
    return _decomp(g.masks(), i, True)


# -- neighbourhood inclusion-exclusion ------------------------------------

def _ie_step(masks: Masks, v: int, rec) -> UniPoly:
    nbrs = list(_bits(masks[v]))
    total = UniPoly.x() * rec(_drop(masks, 1 << v))
    for r in range(1, len(nbrs) + 1):
        sign = 1 if r % 2 else -1
        for ws in combinations(nbrs, r):
            group = 1 << v
            for w in ws:
                group |= 1 << w
            total = total + sign * rec(_identify(masks, group))
    return total


@lru_cache(maxsize=100_000)
def _ie(masks: Masks) -> UniPoly:
    n = len(masks)
    if n == 0:
        return UniPoly.one()
    # smallest neighbourhood keeps the alternating sum short
    v = min(range(n), key=lambda i: (_popcount(masks[i]), i))
    return _ie_step(masks, v, _ie)


def q_neighborhood_ie(g: Graph, v=None) -> UniPoly:
    """``x*Q(G-v)`` plus the alternating sum of ``Q(G / (W + v))`` over nonempty ``W`` in ``N(v)``."""
    if g.n == 0:
        return UniPoly.one()
    i = 0 if v is None else g.index(v)
    return _ie_step(g.masks(), i, _ie)


# -- reductions -----------------------------------------------------------

def reduce_pendant(g: Graph) -> tuple[BiPoly, Graph]:
    """Strip degree-1 vertices until none remain.

    Returns ``(factor, core)`` with ``Q(G,x,y) = factor * Q(core,x,y)``;
    ``factor`` is ``(x+y)**k`` for ``k`` stripped vertices. Use
    ``factor.set_y_to_one()`` for the univariate polynomial.
    """
    k = 0
    core = g
    while True:
        leaf = next((v for v in core.vertices if core.degree(v) == 1), None)
        if leaf is None:
            break
        core = delete(core, [leaf])
        k += 1
    return (BiPoly.x() + BiPoly.y()) ** k, core


def q_bridge_split(g: Graph, edge, inner: Callable[[Graph], UniPoly] | None = None) -> UniPoly:
    """``Q(G/e) + Q(G-e)`` for a bridge ``e``; the two terms use ``inner`` (default :func:`q_auto`)."""
    u, w = edge
    e = g.edge(u, w)
    if e not in bridges(g):
        raise GraphError(f"{format_label(e[0])}-{format_label(e[1])} is not a bridge")
    inner = inner or q_auto
    return inner(contract(g, [e])) + inner(delete(g, edges=[e]))


def _is_cut(g: Graph, s) -> bool:
    """Every edge of ``s`` joins two different components of ``G - s``.

    This is what the alternating sum needs: a nonempty edge set that merely
    increases the component count may keep some of its edges inside one
    component, and then the identity fails.
    """
    if not s:
        return False
    comp = components(delete(g, edges=s))
    return all(comp.block_of(u) != comp.block_of(w) for u, w in s)


def q_minus_cut(g: Graph, cut: Iterable, inner: Callable[[Graph], UniPoly] | None = None) -> UniPoly:
    """``Q(G - S)`` as the alternating sum of ``Q(G/F)`` over subsets ``F`` of the cut ``S``."""
    s = g.edge_set(cut)
    if not _is_cut(g, s):
        raise GraphError("edge set is not a cut: some edge has both ends in one component of G - S")
    inner = inner or q_auto
    total = UniPoly()
    for r in range(len(s) + 1):
        for f in combinations(s, r):
            term = inner(contract(g, f))
            total = total + term if r % 2 == 0 else total - term
    return total


def q_minus_matching(g: Graph, matching: Iterable, inner: Callable[[Graph], UniPoly] | None = None) -> UniPoly:
    """``Q(G - M)`` as the sum of ``(-x)**|I| * Q(G extract I)`` over subsets ``I`` of ``M``.

    Every endpoint of every matching edge must be adjacent to all other vertices.
    """
    m = g.edge_set(matching)
    used: set = set()
    for u, w in m:
        label = f"{format_label(u)}-{format_label(w)}"
        if u in used or w in used:
            raise GraphError(f"matching edge {label} shares an endpoint with another matching edge")
        used |= {u, w}
        if g.degree(u) != g.n - 1 or g.degree(w) != g.n - 1:
            raise GraphError(f"matching edge {label} has an endpoint not adjacent to every other vertex")
    inner = inner or q_auto
    total = UniPoly()
    minus_x = UniPoly((0, -1))
    for r in range(len(m) + 1):
        for sub in combinations(m, r):
            total = total + minus_x**r * inner(extract_matching(g, sub))
    return total


# -- dispatcher -----------------------------------------------------------

def _auto(g: Graph, strategy: str, bivariate: bool, memo: dict):
    one, x, y = _ring(bivariate)
    key = g.key()
    if key in memo:
        return memo[key]
    if g.n == 0:
        value = one
    elif g.n == 1:
        value = x
    elif not g.is_connected():
        value = one
        for block in components(g).blocks:
            value = value * _auto(g.induced(block), strategy, bivariate, memo)
    else:
        factor, core = reduce_pendant(g)
        if core.n != g.n:
            if not bivariate:
                factor = factor.set_y_to_one()
            value = factor * _auto(core, strategy, bivariate, memo)
        else:
            br = bridges(g)
            if br:
                e = br[0]
                # contracting a bridge keeps it as one intra-block edge
                value = _auto(delete(g, edges=[e]), strategy, bivariate, memo) + y * _auto(
                    contract(g, [e]), strategy, bivariate, memo
                )
            elif strategy == "ie":
                value = _ie(g.masks())
            else:
                value = _decomp(g.masks(), 0, bivariate)
    memo[key] = value
    return value


def q_auto(g: Graph, strategy: str = "auto", cap: int | None = None) -> UniPoly:
    """Partition polynomial with the chosen strategy.

    ``brute`` enumerates the bond lattice. ``decomp``, ``ie`` and ``auto``
    first split components, strip pendant vertices and split bridges, then run
    the vertex decomposition (``decomp``, ``auto``) or the neighbourhood
    inclusion-exclusion (``ie``) on what remains.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    if strategy == "brute":
        return q_brute(g, cap)
    return _auto(g, strategy, False, {})


def q_auto_xy(g: Graph, strategy: str = "auto", cap: int | None = None) -> BiPoly:
    """Bivariate analogue of :func:`q_auto`; ``ie`` has no bivariate form."""
    if strategy == "ie":
        raise ValueError("the inclusion-exclusion recursion has no bivariate form")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    if strategy == "brute":
        return q_brute_xy(g, cap)
    return _auto(g, strategy, True, {})
