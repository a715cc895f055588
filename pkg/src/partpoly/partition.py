"""Set partitions of an ordered ground set in restricted-growth form.

A :class:`SetPartition` stores its ground set as a tuple and one block index
per element. Indices always form a restricted-growth string, so two
partitions over the same ordered ground set are equal exactly when their
codes are equal, and partitions can be used as dictionary keys.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import PartitionError, ResourceCapError
from .graph import Graph, _sort_key, format_label

__all__ = [
    "SetPartition",
    "PARTITION_CAP",
    "rgs_codes",
    "enumerate_partitions",
    "join",
    "restrict",
    "merge",
    "is_refinement",
    "induced_by_components",
    "is_connected_partition",
    "bell",
]

PARTITION_CAP = 14


def _canonical(codes: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for c in codes:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def _fmt(e) -> str:
    return format_label(e) if isinstance(e, frozenset) else str(e)


class SetPartition:
    """Partition of ``ground`` given by block index per element."""

    __slots__ = ("ground", "codes", "_pos")

    def __init__(self, ground: Iterable, codes: Iterable[int]):
        ground = tuple(ground)
        codes = tuple(codes)
        if len(ground) != len(codes):
            raise PartitionError("ground set and code lengths differ")
        if len(set(ground)) != len(ground):
            raise PartitionError("ground set has repeated elements")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "codes", _canonical(codes))
        object.__setattr__(self, "_pos", None)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    def __reduce__(self):
        return (SetPartition, (self.ground, self.codes))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable], ground: Iterable | None = None) -> "SetPartition":
        blocks = [list(b) for b in blocks]
        where: dict = {}
        for k, b in enumerate(blocks):
            if not b:
                raise PartitionError("empty block")
            for e in b:
                if e in where:
                    raise PartitionError(f"element {_fmt(e)} appears in two blocks")
                where[e] = k
        if ground is None:
            ground = [e for b in blocks for e in b]
        ground = tuple(ground)
        if set(ground) != set(where):
            raise PartitionError("blocks do not cover the ground set exactly")
        return cls(ground, [where[e] for e in ground])

    @classmethod
    def finest(cls, ground: Iterable) -> "SetPartition":
        ground = tuple(ground)
        return cls(ground, range(len(ground)))

    @classmethod
    def coarsest(cls, ground: Iterable) -> "SetPartition":
        ground = tuple(ground)
        return cls(ground, [0] * len(ground))

    @classmethod
    def parse(cls, text: str, ground: Iterable | None = None) -> "SetPartition":
        """Read the ``a,b|c|d,e`` notation. Elements stay strings; ``""`` is the empty partition."""
        text = text.strip()
        blocks = [] if not text else [[t.strip() for t in b.split(",")] for b in text.split("|")]
        if any(not t for b in blocks for t in b):
            raise PartitionError(f"malformed partition {text!r}")
        return cls.from_blocks(blocks, ground)

    @property
    def blocks(self) -> tuple[tuple, ...]:
        """Blocks in order of their first element; elements in ground order."""
        out: list[list] = [[] for _ in range(len(self))]
        for e, c in zip(self.ground, self.codes):
            out[c].append(e)
        return tuple(tuple(b) for b in out)

    def __len__(self) -> int:
        return max(self.codes) + 1 if self.codes else 0

    def block_of(self, e) -> int:
        if self._pos is None:
            object.__setattr__(self, "_pos", {g: i for i, g in enumerate(self.ground)})
        return self.codes[self._pos[e]]

    def same_ground(self, other: "SetPartition") -> bool:
        return len(self.ground) == len(other.ground) and set(self.ground) == set(other.ground)

    def reorder(self, ground: Sequence) -> "SetPartition":
        """The same partition written over a reordering of its ground set."""
        if tuple(ground) == self.ground:
            return self
        if set(ground) != set(self.ground) or len(ground) != len(self.ground):
            raise PartitionError("reorder needs a permutation of the ground set")
        return SetPartition(ground, [self.block_of(e) for e in ground])

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.ground == other.ground and self.codes == other.codes

    def __hash__(self):
        return hash((self.ground, self.codes))

    def __str__(self):
        return "|".join(",".join(_fmt(e) for e in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({str(self)!r})"

    def sorted_str(self) -> str:
        """Rendering with elements sorted inside blocks and blocks by smallest member."""
        bs = [sorted(b, key=lambda e: _sort_key(_fmt(e))) for b in self.blocks]
        bs.sort(key=lambda b: _sort_key(_fmt(b[0])))
        return "|".join(",".join(_fmt(e) for e in b) for b in bs)


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for a in row:
            nxt.append(nxt[-1] + a)
        row = nxt
    return row[0]


def rgs_codes(n: int) -> Iterator[list[int]]:
    """All restricted-growth strings of length ``n`` in lexicographic order.

    The same list object is mutated and yielded each time; copy it if kept.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = max(b[i], a[i] + 1)


def enumerate_partitions(ground: Iterable, cap: int = PARTITION_CAP) -> Iterator[SetPartition]:
    """Every partition of ``ground`` exactly once, in restricted-growth lexicographic order."""
    ground = tuple(ground)
    if len(ground) > cap:
        raise ResourceCapError(
            f"enumerating partitions of {len(ground)} elements exceeds the cap of {cap} "
            f"(B({len(ground)}) = {bell(len(ground))})"
        )
    for codes in rgs_codes(len(ground)):
        yield SetPartition(ground, codes)


def _check_same(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    if not pi.same_ground(sigma):
        raise PartitionError("partitions live on different ground sets")
    return sigma.reorder(pi.ground)


def join(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """Finest common coarsening of two partitions of the same ground set."""
    sigma = _check_same(pi, sigma)
    n = len(pi.ground)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for codes in (pi.codes, sigma.codes):
        first: dict[int, int] = {}
        for i, c in enumerate(codes):
            if c in first:
                a, b = find(first[c]), find(i)
                if a != b:
                    # smaller representative wins
                    parent[max(a, b)] = min(a, b)
            else:
                first[c] = i
    return SetPartition(pi.ground, [find(i) for i in range(n)])


def restrict(pi: SetPartition, subset: Iterable) -> SetPartition:
    """Partition induced on ``subset``; order follows ``pi.ground``."""
    u = set(subset)
    if not u <= set(pi.ground):
        raise PartitionError("restriction set is not contained in the ground set")
    keep = [(e, c) for e, c in zip(pi.ground, pi.codes) if e in u]
    return SetPartition([e for e, _ in keep], [c for _, c in keep])


def merge(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """Join of ``pi`` and ``sigma`` after padding both to the union of their grounds with singletons."""
    ground = list(pi.ground) + [e for e in sigma.ground if e not in set(pi.ground)]
    k = len(pi)
    codes_pi = list(pi.codes) + list(range(k, k + len(ground) - len(pi.ground)))
    a = SetPartition(ground, codes_pi)
    pos = {e: i for i, e in enumerate(sigma.ground)}
    offset = len(sigma)
    codes_sigma = []
    fresh = offset
    for e in ground:
        if e in pos:
            codes_sigma.append(sigma.codes[pos[e]])
        else:
            codes_sigma.append(fresh)
            fresh += 1
    return join(a, SetPartition(ground, codes_sigma))


def is_refinement(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff every block of ``sigma`` lies inside a block of ``pi``."""
    pi = _check_same(sigma, pi)
    image: dict[int, int] = {}
    for cs, cp in zip(sigma.codes, pi.codes):
        if image.setdefault(cs, cp) != cp:
            return False
    return True


def _require_vertex_ground(g: Graph, pi: SetPartition) -> SetPartition:
    if set(pi.ground) != set(g.vertices) or len(pi.ground) != g.n:
        raise PartitionError("partition ground set differs from the graph's vertex set")
    return pi


def induced_by_components(g: Graph, pi: SetPartition) -> SetPartition:
    """Split each block of ``pi`` into the connected components it induces in ``g``."""
    _require_vertex_ground(g, pi)
    code = {}
    nxt = 0
    for v in pi.ground:
        if v in code:
            continue
        b = pi.block_of(v)
        stack = [v]
        code[v] = nxt
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in code and pi.block_of(w) == b:
                    code[w] = nxt
                    stack.append(w)
        nxt += 1
    return SetPartition(pi.ground, [code[v] for v in pi.ground])


def is_connected_partition(g: Graph, pi: SetPartition) -> bool:
    """True iff every block of ``pi`` induces a connected subgraph of ``g``."""
    return len(induced_by_components(g, pi)) == len(pi)
