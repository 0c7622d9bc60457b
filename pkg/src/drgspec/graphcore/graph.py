from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..errors import DisconnectedGraph, IndexOutOfRange, SelfLoop


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency`` is a read-only symmetric boolean matrix with an empty
    diagonal. Build instances with :meth:`from_edges` or
    :meth:`from_adjacency`, which validate and (by default) reject
    disconnected inputs.
    """

    n: int
    adjacency: np.ndarray
    name: Optional[str] = None

    @classmethod
    def from_adjacency(cls, adj, name=None, require_connected=True) -> "Graph":
        a = np.array(adj, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if a.diagonal().any():
            v = int(np.flatnonzero(a.diagonal())[0])
            raise SelfLoop(f"self-loop at vertex {v}")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix is not symmetric")
        a.setflags(write=False)
        g = cls(n=a.shape[0], adjacency=a, name=name)
        if require_connected and not g.is_connected():
            raise DisconnectedGraph(
                f"graph{' ' + name if name else ''} on {g.n} vertices is disconnected"
            )
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name=None,
                   require_connected=True) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            a[u, v] = a[v, u] = True
        return cls.from_adjacency(a, name=name, require_connected=require_connected)

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        deg = self.degrees
        if self.n == 0 or not (deg == deg[0]).all():
            return None
        return int(deg[0])

    def is_regular(self) -> bool:
        return self.degree is not None

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[u])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return bool(seen.all())

    def matrix(self, dtype=float) -> np.ndarray:
        return self.adjacency.astype(dtype)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges}>"
