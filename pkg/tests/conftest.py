import math
from functools import lru_cache
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from drgspec.graphcore import Graph, generate_family, intersection_array
from drgspec.spectra import graph_spectrum, make_spectrum

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"

SQRT5 = math.sqrt(5.0)
WELLS = ([5.0, SQRT5, 1.0, -SQRT5, -3.0], [1, 8, 10, 8, 5])

# distance-regular families used throughout
DRG_FAMILIES = [
    "petersen",
    "cycle:6",
    "cycle:7",
    "hypercube:3",
    "hypercube:4",
    "complete:4",
    "complete:7",
    "hamming:2,3",
    "hamming:3,3",
    "johnson:5,2",
    "johnson:6,3",
    "kneser:7,2",
    "odd:4",
    "odd:5",
    "folded_hypercube:5",
    "folded_hypercube:10",
]


@lru_cache(maxsize=None)
def family(spec):
    return generate_family(spec)


@lru_cache(maxsize=None)
def family_spectrum(spec):
    return graph_spectrum(family(spec))


def wells_spectrum():
    return make_spectrum(*WELLS)


def prism():
    """K3 x K2: 3-regular on 6 vertices, not distance-regular."""
    g = nx.circular_ladder_graph(3)
    return Graph.from_edges(6, g.edges(), name="prism")


def circulant(n, jumps):
    g = nx.circulant_graph(n, jumps)
    return Graph.from_edges(n, g.edges(), name=f"circulant:{n}:{jumps}")


def petersen_minus_edge():
    g = family("petersen")
    edges = [e for e in g.edges() if e != (0, 7)]
    assert len(edges) == 14
    return Graph.from_edges(10, edges, name="petersen-e")


@lru_cache(maxsize=None)
def random_regular_graphs(count=50, seed=20240611, max_n=64):
    """Connected random regular graphs of degree 3..6 on at most ``max_n`` vertices."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        k = int(rng.integers(3, 7))
        n = int(rng.integers(k + 3, max_n + 1))
        if n * k % 2:
            n -= 1
        g = nx.random_regular_graph(k, n, seed=int(rng.integers(1 << 31)))
        if nx.is_connected(g):
            out.append(Graph.from_edges(n, g.edges(), name=f"rr{k}_{n}_{len(out)}"))
    return tuple(out)


@lru_cache(maxsize=None)
def random_non_drg(count=12):
    return tuple(g for g in random_regular_graphs() if not intersection_array(g))[:count]


def fixture_spectra():
    """(label, Spectrum) pairs: every DRG family plus a few small non-DRGs."""
    out = [(spec, family_spectrum(spec)) for spec in DRG_FAMILIES]
    out.append(("wells", wells_spectrum()))
    out.append(("prism", graph_spectrum(prism())))
    for g in (circulant(8, [1, 2]), circulant(10, [1, 2]), circulant(12, [1, 5])):
        out.append((g.name, graph_spectrum(g)))
    return out


# acceptance summary: tests/test_acceptance.py records one line per criterion
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")


@pytest.fixture
def wells():
    return wells_spectrum()
