"""Generators for the standard graph families."""
from __future__ import annotations

import random

from .errors import GraphError
from .graph import Graph

__all__ = [
    "empty",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_minus_matching",
    "random_tree",
    "random_forest",
    "make_family",
]


def _nonneg(**sizes):
    for name, v in sizes.items():
        if v < 0:
            raise GraphError(f"{name} must be nonnegative, got {v}")


def empty(n: int) -> Graph:
    _nonneg(n=n)
    return Graph(range(n))


def path(n: int) -> Graph:
    _nonneg(n=n)
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _nonneg(n=n)
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    """Parts ``0..s-1`` and ``s..s+t-1``."""
    _nonneg(s=s, t=t)
    return Graph(range(s + t), [(i, s + j) for i in range(s) for j in range(t)])


def complete_minus_matching(n: int, m: int) -> Graph:
    """``K_n`` without the matching ``{0,1}, {2,3}, ...`` of ``m`` edges."""
    _nonneg(n=n, m=m)
    if m > n // 2:
        raise GraphError(f"a matching in K_{n} has at most {n // 2} edges, got {m}")
    removed = {(2 * k, 2 * k + 1) for k in range(m)}
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in removed])


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree from a random Pruefer sequence."""
    _nonneg(n=n)
    if n <= 1:
        return Graph(range(n))
    rng = random.Random(seed)
    if n == 2:
        return Graph(range(2), [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph(range(n), edges)


def random_forest(n: int, m: int, seed: int = 0) -> Graph:
    """Random forest on ``n`` vertices with exactly ``m`` edges (a random tree minus edges)."""
    _nonneg(n=n, m=m)
    if m > max(n - 1, 0):
        raise GraphError(f"a forest on {n} vertices has at most {max(n - 1, 0)} edges, got {m}")
    rng = random.Random(seed)
    tree = random_tree(n, seed=rng.randrange(2**32))
    edges = list(tree.edges)
    rng.shuffle(edges)
    return Graph(tree.vertices, edges[:m])


def make_family(name: str, *args: int, seed: int = 0) -> Graph:
    """Build a family member by name, e.g. ``make_family("complete_bipartite", 2, 3)``."""
    builders = {
        "empty": empty,
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "complete_minus_matching": complete_minus_matching,
    }
    if name in builders:
        return builders[name](*args)
    if name in ("random_tree", "tree"):
        return random_tree(*args, seed=seed)
    if name == "random_forest":
        return random_forest(*args, seed=seed)
    raise GraphError(f"unknown graph family {name!r}")
