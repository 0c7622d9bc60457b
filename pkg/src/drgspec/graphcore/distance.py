"""BFS distance structure and the combinatorial distance-regularity test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..errors import IndexOutOfRange
from .graph import Graph


@dataclass(frozen=True, eq=False)
class DistanceProfile:
    """All-pairs distances plus per-vertex and mean layer sizes.

    ``k_of[u, i]`` is the number of vertices at distance ``i`` from ``u``;
    ``kbar[i]`` and ``sbar[i]`` are the means of the layer sizes and of
    their cumulative sums over all vertices.
    """

    diameter: int
    dist: np.ndarray
    k_of: np.ndarray
    kbar: np.ndarray
    sbar: np.ndarray

    def kbar_at(self, i: int) -> float:
        """Mean layer size at distance ``i``; zero beyond the diameter."""
        return float(self.kbar[i]) if 0 <= i <= self.diameter else 0.0

    def sbar_at(self, i: int) -> float:
        return float(self.sbar[min(i, self.diameter)]) if i >= 0 else 0.0


def bfs_distances(g: Graph) -> np.ndarray:
    """All-pairs BFS distances, computed level by level for all sources at once.

    Unreachable pairs get ``-1``.
    """
    n = g.n
    a = g.matrix(np.float64)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n)
    level = 0
    while True:
        level += 1
        nxt = (frontier @ a > 0) & ~reached
        if not nxt.any():
            break
        dist[nxt] = level
        reached |= nxt
        frontier = nxt.astype(np.float64)
    return dist


def distance_profile(g: Graph) -> DistanceProfile:
    dist = bfs_distances(g)
    if (dist < 0).any():
        raise ValueError("distance_profile requires a connected graph")
    diameter = int(dist.max())
    k_of = np.stack([(dist == i).sum(axis=1) for i in range(diameter + 1)], axis=1)
    kbar = k_of.mean(axis=0)
    sbar = np.cumsum(k_of, axis=1).mean(axis=0)
    for arr in (dist, k_of, kbar, sbar):
        arr.setflags(write=False)
    return DistanceProfile(diameter=diameter, dist=dist, k_of=k_of, kbar=kbar, sbar=sbar)


def distance_graph(g: Graph, i: int, profile: Optional[DistanceProfile] = None) -> Graph:
    """Graph on the same vertices with u ~ v iff dist(u, v) == i.

    The result may be disconnected. For ``i == 0`` it has no edges.
    """
    profile = profile or distance_profile(g)
    if not 0 <= i <= profile.diameter:
        raise IndexOutOfRange(f"distance {i} outside 0..{profile.diameter}")
    adj = profile.dist == i
    if i == 0:
        adj = np.zeros_like(adj)
    label = f"{g.name or 'graph'}[dist={i}]"
    return Graph.from_adjacency(adj, name=label, require_connected=False)


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class NotDistanceRegular:
    """Witness that the layer counts are not constant at some distance.

    The pairs ``witness`` and ``reference`` are both at distance ``distance``
    but see different values of the ``parameter`` count ('b' or 'c').
    """

    distance: int
    parameter: str
    witness: tuple[int, int]
    reference: tuple[int, int]
    values: tuple[int, int]

    def __bool__(self):
        return False


def intersection_array(
    g: Graph, profile: Optional[DistanceProfile] = None
) -> Union[IntersectionArray, NotDistanceRegular]:
    """Return the intersection array of ``g`` or a witness that none exists.

    For every pair (u, v) at distance i, counts the neighbours of u at
    distance i+1 (b) and i-1 (c) from v. Irregular graphs fail at i = 0.
    """
    profile = profile or distance_profile(g)
    dist = profile.dist
    D = profile.diameter
    a = g.matrix(np.float64)
    layers = [(dist == j).astype(np.float64) for j in range(D + 1)]
    # through[j][u, v] = #{w ~ u : dist(w, v) == j}
    through = [np.rint(a @ layer).astype(np.int64) for layer in layers]

    b, c = [], []
    for i in range(D + 1):
        mask = dist == i
        us, vs = np.nonzero(mask)
        checks = []
        if i < D:
            checks.append(("b", through[i + 1], b))
        if i > 0:
            checks.append(("c", through[i - 1], c))
        for label, counts, out in checks:
            vals = counts[us, vs]
            bad = np.flatnonzero(vals != vals[0])
            if bad.size:
                j = int(bad[0])
                return NotDistanceRegular(
                    distance=i,
                    parameter=label,
                    witness=(int(us[j]), int(vs[j])),
                    reference=(int(us[0]), int(vs[0])),
                    values=(int(vals[j]), int(vals[0])),
                )
            out.append(int(vals[0]))
    return IntersectionArray(b=tuple(b), c=tuple(c))
