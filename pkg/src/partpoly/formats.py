"""graph6 and edge-list input, graph6 output."""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphParseError
from .graph import Graph

__all__ = ["parse_graph", "parse_graph6", "parse_edgelist", "to_graph6", "iter_graph6"]

_HEADER = b">>graph6<<"


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise GraphParseError("empty graph6 string", 0)
    for pos, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b!r} outside the graph6 range 63..126", pos)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 36-bit vertex count", len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated 18-bit vertex count", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 string. Vertices are the integers ``0..n-1``."""
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    n, start = _decode_n(data)
    body = data[start:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(
            f"expected {expected} data bytes for n={n}, found {len(body)}", start + min(len(body), expected)
        )
    for off, b in enumerate(body):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b!r} outside the graph6 range 63..126", start + off)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphParseError("nonzero padding bits", start + len(body) - 1)
    return Graph(range(n), edges)


def to_graph6(g: Graph) -> str:
    """Encode ``g`` with vertices taken in their stored order."""
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    masks = g.masks()
    bits = [(masks[j] >> i) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


def parse_edgelist(text: bytes | str) -> Graph:
    """One ``u v`` pair per line; a single token declares an isolated vertex.

    Blank lines and ``#`` comments are ignored. Vertex order is order of
    first appearance.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    order: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_keys: set[frozenset] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) > 2:
            raise GraphParseError(f"expected 'u v', got {len(toks)} tokens", f"line {lineno}")
        for t in toks:
            if t not in seen:
                seen.add(t)
                order.append(t)
        if len(toks) == 2:
            u, v = toks
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u!r}", f"line {lineno}")
            key = frozenset((u, v))
            if key in edge_keys:
                raise GraphParseError(f"duplicate edge {u} {v}", f"line {lineno}")
            edge_keys.add(key)
            edges.append((u, v))
    return Graph(order, edges)


def parse_graph(text: bytes | str, format: str = "edgelist") -> Graph:
    if format == "graph6":
        return parse_graph6(text)
    if format == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {format!r}")


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[tuple[int, str, Graph | GraphParseError]]:
    """Yield ``(line number, raw text, graph or error)`` for each nonblank line."""
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        raw = line.strip()
        if not raw or raw.startswith(">>graph6<<") and len(raw) == len(">>graph6<<"):
            continue
        try:
            yield lineno, raw, parse_graph6(raw)
        except GraphParseError as exc:
            yield lineno, raw, exc
