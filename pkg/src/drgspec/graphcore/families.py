"""Deterministic generators for the standard graph families.

Vertices are numbered in lexicographic order of their defining labels
(subsets via :func:`itertools.combinations`, words via
:func:`itertools.product`, bitstrings most-significant bit first).
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from ..errors import ParameterOutOfRange, UnknownFamily
from .graph import Graph


def complete(n: int) -> Graph:
    if n < 2:
        raise ParameterOutOfRange(f"complete graph needs n >= 2, got {n}")
    return Graph.from_adjacency(~np.eye(n, dtype=bool), name=f"complete:{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterOutOfRange(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle:{n}")


def _subset_graph(n, k, adjacent, name):
    labels = [frozenset(c) for c in combinations(range(n), k)]
    m = len(labels)
    adj = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(a + 1, m):
            if adjacent(labels[a], labels[b]):
                adj[a, b] = adj[b, a] = True
    return Graph.from_adjacency(adj, name=name)


def kneser(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent when disjoint."""
    # n = 2k gives a perfect matching; connectivity needs n >= 2k + 1
    if k < 1 or n < 2 * k + 1:
        raise ParameterOutOfRange(f"kneser({n},{k}) needs k >= 1 and n >= 2k+1")
    return _subset_graph(n, k, lambda a, b: not (a & b), name=f"kneser:{n},{k}")


def odd(k: int) -> Graph:
    """The odd graph O_k = kneser(2k-1, k-1)."""
    if k < 2:
        raise ParameterOutOfRange(f"odd graph needs k >= 2, got {k}")
    g = kneser(2 * k - 1, k - 1)
    return Graph(n=g.n, adjacency=g.adjacency, name=f"odd:{k}")


def petersen() -> Graph:
    g = kneser(5, 2)
    return Graph(n=g.n, adjacency=g.adjacency, name="petersen")


def johnson(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent when they share k-1 elements."""
    if not 1 <= k < n:
        raise ParameterOutOfRange(f"johnson({n},{k}) needs 1 <= k < n")
    return _subset_graph(n, k, lambda a, b: len(a & b) == k - 1, name=f"johnson:{n},{k}")


def hamming(m: int, q: int) -> Graph:
    """Words of length m over a q-letter alphabet, adjacent at Hamming distance 1."""
    if m < 1 or q < 2:
        raise ParameterOutOfRange(f"hamming({m},{q}) needs m >= 1 and q >= 2")
    words = np.array(list(product(range(q), repeat=m)), dtype=np.int64)
    diff = (words[:, None, :] != words[None, :, :]).sum(axis=2)
    return Graph.from_adjacency(diff == 1, name=f"hamming:{m},{q}")


def hypercube(m: int) -> Graph:
    if m < 1:
        raise ParameterOutOfRange(f"hypercube needs m >= 1, got {m}")
    n = 1 << m
    edges = [(x, x ^ (1 << j)) for x in range(n) for j in range(m) if x < x ^ (1 << j)]
    return Graph.from_edges(n, edges, name=f"hypercube:{m}")


def folded_hypercube(m: int) -> Graph:
    """Quotient of the m-cube by antipodal pairs.

    Representatives are the bitstrings with leading bit 0 (integers below
    ``2**(m-1)``); a neighbour ``y`` of ``x`` in the m-cube is folded to
    ``min(y, ~y)``.
    """
    if m < 3:
        raise ParameterOutOfRange(f"folded hypercube needs m >= 3, got {m}")
    mask = (1 << m) - 1
    n = 1 << (m - 1)
    edges = []
    for x in range(n):
        for j in range(m):
            y = x ^ (1 << j)
            edges.append((x, min(y, y ^ mask)))
    return Graph.from_edges(n, edges, name=f"folded_hypercube:{m}")


FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "petersen": (petersen, 0),
    "hypercube": (hypercube, 1),
    "folded_hypercube": (folded_hypercube, 1),
    "kneser": (kneser, 2),
    "odd": (odd, 1),
    "johnson": (johnson, 2),
    "hamming": (hamming, 2),
}


def parse_family_spec(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"kneser:5,2"`` into ``("kneser", (5, 2))``."""
    name, _, rest = spec.strip().partition(":")
    name = name.strip().lower().replace("-", "_")
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    try:
        params = tuple(int(p) for p in rest.split(",") if p.strip()) if rest else ()
    except ValueError as exc:
        raise ParameterOutOfRange(f"non-integer parameter in {spec!r}") from exc
    arity = FAMILIES[name][1]
    if len(params) != arity:
        raise ParameterOutOfRange(f"{name} takes {arity} parameter(s), got {len(params)}")
    return name, params


def generate_family(spec: str | tuple) -> Graph:
    """Build a family graph from ``"odd:5"`` or ``("odd", 5)``."""
    if isinstance(spec, str):
        name, params = parse_family_spec(spec)
    else:
        name, *params = spec
        if name not in FAMILIES:
            raise UnknownFamily(f"unknown family {name!r}")
        if len(params) != FAMILIES[name][1]:
            raise ParameterOutOfRange(f"{name} takes {FAMILIES[name][1]} parameter(s)")
    return FAMILIES[name][0](*params)
