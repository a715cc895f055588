"""Graph invariants read off the partition polynomial, and coefficient inequalities.

Nothing here looks at a graph: the inputs are polynomials only.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .errors import GraphError, MalformedPolynomialError
from .poly import BiPoly, UniPoly

__all__ = ["InvariantReport", "invariants_from_q", "dowling_wilson_check", "min_kcut_from_qxy"]


@dataclass(frozen=True)
class InvariantReport:
    components: int
    edges: int
    triangles: int
    girth: int | str
    girth_cycle_count: int
    bonds: int | None = None
    four_cycles: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r or q < 0:
        raise MalformedPolynomialError(f"{what} is not a nonnegative integer ({num}/{den})")
    return q


def invariants_from_q(q: UniPoly, n: int | None = None) -> InvariantReport:
    """Components, edges, triangles, girth and related counts from ``Q(G, x)``.

    Raises :class:`MalformedPolynomialError` when a derived count is not a
    nonnegative integer, i.e. ``q`` cannot come from a graph.
    """
    if n is None:
        n = q.degree
    if q.is_zero() or q.degree != n or q[n] != 1 or any(a < 0 for a in q):
        raise MalformedPolynomialError(f"{q} is not a partition polynomial of a graph on {n} vertices")
    c = q.low_degree
    if n == 0:
        return InvariantReport(0, 0, 0, "acyclic", 0, None, None)
    m = q[n - 1] if n >= 1 else 0
    triangles = _exact_div(comb(m, 2) - q[n - 2], 2, "triangle count") if n >= 2 else 0
    # least k with q_{n-k} < C(m, k); forest when none up to n - c
    girth: int | str = "acyclic"
    cycles = 0
    for k in range(1, n - c + 1):
        if q[n - k] > comb(m, k):
            raise MalformedPolynomialError(f"q_{n - k} exceeds C({m},{k})")
        if q[n - k] < comb(m, k):
            girth = k + 1
            cycles = _exact_div(comb(m, k) - q[n - k], k, "girth cycle count")
            break
    bonds = q[2] if c == 1 else None
    four = None
    if triangles == 0 and n >= 3:
        four = _exact_div(comb(m, 3) - q[n - 3], 3, "four-cycle count")
    return InvariantReport(c, m, triangles, girth, cycles, bonds, four)


def dowling_wilson_check(q: UniPoly) -> bool:
    """True iff ``sum_{i<=k} q_i >= sum_{i<k} q_{n-i}`` for every ``k`` in ``1..n``.

    Only meaningful for connected graphs, so ``q`` must have lowest power 1.
    """
    if q.low_degree != 1:
        raise GraphError("the inequality is stated for connected graphs (lowest power must be x)")
    n = q.degree
    low = high = 0
    for k in range(1, n + 1):
        low += q[k]
        high += q[n - k + 1]
        if low < high:
            return False
    return True


def min_kcut_from_qxy(b: BiPoly, k: int, m: int) -> int | None:
    """Fewest edges whose deletion leaves exactly ``k`` components; None when impossible.

    The y-power of a term counts intra-block edges, so the cut size is ``m`` minus
    the largest y-power found with ``x**k``.
    """
    powers = b.y_powers(k)
    if not powers:
        return None
    return m - powers[-1]
