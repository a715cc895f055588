"""Closed forms for special graph families."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .errors import GraphError, ResourceCapError
from .families import make_family
from .graph import Graph
from .poly import BiPoly, UniPoly

__all__ = [
    "FamilySpec",
    "stirling2",
    "q_closed",
    "q_closed_xy",
    "q_k1t",
    "q_k2t",
    "q_kn_xy_partition_sum",
    "integer_partitions",
]

FAMILIES = ("empty", "tree", "cycle", "complete", "complete_bipartite", "complete_minus_matching")
_ARITY = {"empty": 1, "tree": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2, "complete_minus_matching": 2}
INTEGER_PARTITION_CAP = 40


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its size parameters: ``(n,)``, ``(s, t)`` or ``(n, m)``."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        params = tuple(int(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != _ARITY[self.family]:
            raise GraphError(f"{self.family} takes {_ARITY[self.family]} size parameter(s), got {len(params)}")
        if any(p < 0 for p in params):
            raise GraphError("family sizes must be nonnegative")
        if self.family == "tree" and params[0] < 1:
            raise GraphError("a tree has at least one vertex")
        if self.family == "cycle" and params[0] < 3:
            raise GraphError("a cycle has at least three vertices")
        if self.family == "complete_minus_matching" and params[1] > params[0] // 2:
            raise GraphError(f"a matching in K_{params[0]} has at most {params[0] // 2} edges")

    def graph(self, seed: int = 0) -> Graph:
        """A concrete member; ``tree`` yields a seeded random tree."""
        if self.family == "tree":
            return make_family("random_tree", self.params[0], seed=seed)
        return make_family(self.family, *self.params)


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + k * (prev[k] if k < len(prev) else 0)
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the triangle recurrence."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


def _complete_bipartite(s: int, t: int) -> UniPoly:
    coeffs = [0] * (s + t + 1)
    for i in range(s + 1):
        for j in range(s - i + 1):
            a = comb(s, i) * stirling2(s - i, j) * factorial(j)
            if not a:
                continue
            for k in range(t - j + 1):
                coeffs[i + j + k] += a * comb(t, k) * stirling2(t - k, j)
    return UniPoly(coeffs)


def _complete_minus_matching(n: int, m: int) -> UniPoly:
    coeffs = [0] * (n + 1)
    for i in range(m + 1):
        for j in range(n - 2 * i + 1):
            coeffs[i + j] += comb(m, i) * (-1) ** i * stirling2(n - 2 * i, j)
    return UniPoly(coeffs)


def q_k1t(t: int) -> UniPoly:
    return UniPoly.x() * UniPoly((1, 1)) ** t


def q_k2t(t: int) -> UniPoly:
    x = UniPoly.x()
    xt = UniPoly.monomial(t)
    return x * (UniPoly((1, 1)) ** t - xt) + x**2 * (UniPoly((2, 1)) ** t - xt) + UniPoly.monomial(2 + t)


def q_closed(spec: FamilySpec) -> UniPoly:
    """Partition polynomial of a family member from its closed form."""
    f, p = spec.family, spec.params
    x = UniPoly.x()
    if f == "empty":
        return UniPoly.monomial(p[0])
    if f == "tree":
        return UniPoly((1, 1)) ** (p[0] - 1) * x
    if f == "cycle":
        n = p[0]
        return UniPoly((1, 1)) ** n - 1 - (n - 1) * x
    if f == "complete":
        return UniPoly(_stirling_row(p[0]))
    if f == "complete_bipartite":
        return _complete_bipartite(*p)
    return _complete_minus_matching(*p)


@lru_cache(maxsize=None)
def _kn_xy(n: int) -> BiPoly:
    if n == 0:
        return BiPoly.one()
    total = BiPoly()
    for k in range(1, n + 1):
        total = total + comb(n - 1, k - 1) * BiPoly.monomial(0, comb(k, 2)) * _kn_xy(n - k)
    return BiPoly.x() * total


def q_closed_xy(spec: FamilySpec) -> BiPoly:
    """Bivariate closed forms; only trees, cycles and complete graphs have one."""
    f, p = spec.family, spec.params
    x, y = BiPoly.x(), BiPoly.y()
    if f == "tree":
        return (x + y) ** (p[0] - 1) * x
    if f == "cycle":
        n = p[0]
        return (x + y) ** n - x * y ** (n - 1) * (n - y) - y**n
    if f == "complete":
        return _kn_xy(p[0])
    raise GraphError(f"no bivariate closed form is known for the {f} family")


def integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as nondecreasing part tuples, in lexicographic order."""
    def rec(rest, smallest):
        if rest == 0:
            yield ()
            return
        for part in range(smallest, rest + 1):
            for tail in rec(rest - part, part):
                yield (part,) + tail
    yield from rec(n, 1)


def q_kn_xy_partition_sum(n: int, cap: int = INTEGER_PARTITION_CAP) -> BiPoly:
    """``Q(K_n,x,y)`` as a sum over integer partitions of ``n``.

    A partition with ``k_i`` parts of size ``i`` contributes
    ``n! / prod(k_i! * (i!)**k_i)`` set partitions with that block-size profile,
    each with ``sum(k_i)`` blocks and ``sum(k_i * C(i,2))`` intra-block edges.
    """
    if n > cap:
        raise ResourceCapError(f"integer partitions of {n} exceed the cap of {cap}")
    terms: dict[tuple[int, int], int] = {}
    for parts in integer_partitions(n):
        mult: dict[int, int] = {}
        for part in parts:
            mult[part] = mult.get(part, 0) + 1
        denom = 1
        for i, k in mult.items():
            denom *= factorial(k) * factorial(i) ** k
        count, rem = divmod(factorial(n), denom)
        assert rem == 0
        key = (len(parts), sum(k * comb(i, 2) for i, k in mult.items()))
        terms[key] = terms.get(key, 0) + count
    return BiPoly(terms)
