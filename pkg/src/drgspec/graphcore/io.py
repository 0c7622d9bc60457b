"""graph6 and plain edge-list formats."""

from __future__ import annotations

import numpy as np

from ..errors import MalformedEdgeList, MalformedGraph6
from .graph import Graph

HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, offset)`` where offset is the index of the first edge byte."""
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size field")
        chunks, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte size field")
        chunks, offset = data[1:4], 4
    n = 0
    for c in chunks:
        n = (n << 6) | (c - 63)
    return n, offset


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph too large for graph6: n={n}")


def parse_graph6(text: str | bytes, name=None) -> Graph:
    """Decode one graph6 record into a connected :class:`Graph`."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedGraph6("non-ASCII input") from exc
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if s.startswith(":") or s.startswith("&"):
        raise MalformedGraph6("sparse6/digraph6 records are not graph6")
    data = s.encode("ascii")
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise MalformedGraph6(f"byte {bad[0]} outside the graph6 range 63..126")
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise MalformedGraph6(
            f"expected {expected} edge bytes for n={n}, found {len(body)}"
        )
    bits = np.unpackbits(np.frombuffer(bytes(c - 63 for c in body), dtype=np.uint8)
                         .reshape(-1, 1), axis=1)[:, 2:].ravel()[:nbits]
    adj = np.zeros((n, n), dtype=bool)
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    cols = np.repeat(np.arange(n), np.arange(n))
    rows = np.concatenate([np.arange(j) for j in range(n)]) if n else np.zeros(0, int)
    adj[rows, cols] = bits.astype(bool)
    adj |= adj.T
    return Graph.from_adjacency(adj, name=name)


def to_graph6(g: Graph) -> str:
    n = g.n
    a = g.adjacency
    bits = [a[i, j] for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    out = bytearray(_encode_size(n))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | int(b)
        out.append(v + 63)
    return out.decode("ascii")


def parse_edge_list(text: str, name=None) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` pairs (0-indexed).

    Blank lines and ``#`` comments are ignored.
    """
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens or len(tokens[0]) != 1:
        raise MalformedEdgeList("first line must hold the vertex count")
    try:
        n = int(tokens[0][0])
        edges = []
        for row in tokens[1:]:
            if len(row) != 2:
                raise MalformedEdgeList(f"expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from exc
    return Graph.from_edges(n, edges, name=name)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
