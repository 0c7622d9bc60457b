"""Composite analysis of a graph or of a spectrum document."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import theorems as th
from .errors import IndexOutOfRange, InvalidIndexSet, NotRegular
from .graphcore import (
    Graph,
    IntersectionArray,
    distance_graph,
    distance_profile,
    intersection_array,
)
from .polyengine import eval_poly_on_graph, predistance_system, spectral_excess
from .spectra import Spectrum, SpectrumInput, cluster_eigenvalues, graph_spectrum

TAGS = (
    "distance_regular",
    "partially_antipodal",
    "half_antipodal",
    "antipodal",
    "bipartite",
    "bipartite_not_antipodal",
    "kneser_strongly_regular",
)


@dataclass(frozen=True)
class Tolerances:
    eq: float = th.DEFAULT_TOL_EQ
    cluster: Optional[float] = None
    # grouping of p_d values and of m_i * pi_i products
    values: float = 1e-8


@dataclass(eq=False)
class Classification:
    name: Optional[str]
    source: str
    spectrum: Spectrum
    kd_mean: Optional[float]
    sd1_mean: Optional[float]
    excess: float
    pd_values: np.ndarray
    bounds: list
    tags: dict
    tolerances: Tolerances
    diameter: Optional[int] = None
    partition: Optional[dict] = None
    intersection_array: Optional[str] = None
    oracle_agrees: Optional[bool] = None
    pd_matrix_residual: Optional[float] = None
    kneser_eigenvalue_count: Optional[int] = None
    predicted_kneser_eigenvalue_count: Optional[int] = None
    diagnostics: list = field(default_factory=list)

    def bound(self, name: str, index_set: Optional[Sequence[int]] = None):
        for b in self.bounds:
            if b.bound_name == name and (index_set is None or b.index_set == tuple(index_set)):
                return b
        raise KeyError((name, index_set))


def _group_equal(indices, values, rtol):
    """Group indices whose values agree within ``rtol`` (relative to the largest magnitude)."""
    scale = max(np.abs(values).max(), 1e-300)
    groups = []
    for i in indices:
        for grp in groups:
            if abs(values[i] - values[grp[0]]) <= rtol * scale:
                grp.append(i)
                break
        else:
            groups.append([i])
    return groups


def _is_bipartite_spectrum(s: Spectrum, tol: float) -> bool:
    lam = s.lambdas
    return len(lam) == len(s.mults) and bool(
        np.allclose(lam, -lam[::-1], atol=tol) and np.array_equal(s.mults, s.mults[::-1])
    )


def _kneser_antipodal(kg: Graph) -> bool:
    """True when every component of ``kg`` is a complete graph."""
    a = kg.adjacency | np.eye(kg.n, dtype=bool)
    # reflexive relation is an equivalence iff a @ a keeps the same support
    return bool(np.array_equal((a.astype(np.int64) @ a.astype(np.int64)) > 0, a))


def _graph_is_bipartite(g: Graph, dist: np.ndarray) -> bool:
    us, vs = np.nonzero(np.triu(g.adjacency, 1))
    return bool((dist[0, us] != dist[0, vs]).all())


def classify(
    graph: Optional[Graph] = None,
    spectrum_input: Optional[SpectrumInput] = None,
    tolerances: Tolerances = Tolerances(),
    subset: Optional[Sequence[int]] = None,
) -> Classification:
    """Run every bound and derive the distance-regularity / antipodality verdicts.

    With a graph, the observed means come from BFS, the combinatorial
    intersection-array test is compared with the spectral verdict, and for
    distance-regular inputs the distinct eigenvalues of the distance-d graph
    are counted directly. With only a spectrum document, the means come from
    its ``kd_mean`` / ``sd1_mean`` fields; without them every verdict is
    ``None`` (indeterminate).
    """
    if graph is None and spectrum_input is None:
        raise ValueError("classify needs a graph or a spectrum document")
    tol = tolerances
    diagnostics = []
    profile = None
    if graph is not None:
        if not graph.is_regular():
            raise NotRegular(f"{graph!r} is not regular")
        s = graph_spectrum(graph, tol_cluster=tol.cluster)
        if s.d < 1:
            raise IndexOutOfRange("need at least two distinct eigenvalues")
        profile = distance_profile(graph)
        kd = profile.kbar_at(s.d)
        sd1 = profile.sbar_at(s.d - 1)
        name, source = graph.name, "graph"
        if spectrum_input is not None:
            other = spectrum_input.spectrum
            if other.d != s.d or not (
                np.array_equal(other.mults, s.mults)
                and np.allclose(other.lambdas, s.lambdas, rtol=1e-8, atol=1e-8)
            ):
                diagnostics.append(
                    f"spectrum document {other!r} disagrees with graph spectrum {s!r}; using the graph"
                )
    else:
        s = spectrum_input.spectrum
        if s.d < 1:
            raise IndexOutOfRange("need at least two distinct eigenvalues")
        kd = spectrum_input.kd_mean
        sd1 = spectrum_input.sd1_mean
        if sd1 is None and kd is not None:
            sd1 = s.n - kd
        name, source = spectrum_input.name, "spectrum"

    d = s.d
    excess = spectral_excess(s)
    system = predistance_system(s)
    pd = np.array(system.pd_values)

    bounds = [th.spectral_excess_check(s, kd, tol.eq)]
    if subset is not None:
        h_sets = [th.check_index_set(subset, d)]
    else:
        h_sets = [H for H in (th.even_indices(d), th.odd_indices(d)) if H]
    bounds += [th.theorem2_bound(s, H, kd, tol.eq) for H in h_sets]
    half = th.half_antipodal_check(s, kd, tol.eq)
    bounds.append(half)
    srg = th.srg_kneser_check(s, kd, tol.eq) if d >= 2 else None
    if srg is not None:
        bounds.append(srg)
        if srg.extra["parity_sum_residual"] > 1e-8:
            diagnostics.append(
                "warning: even/odd sums of pi_0/pi_i differ by "
                f"{srg.extra['parity_sum_residual']:.3e} (relative)"
            )
    case0 = [th.case0_bound(s, i, kd, tol.eq) for i in range(1, d + 1)]
    bounds += case0

    tags = dict.fromkeys(TAGS)
    partition = None
    result = Classification(
        name=name, source=source, spectrum=s, kd_mean=kd, sd1_mean=sd1, excess=excess,
        pd_values=pd, bounds=bounds, tags=tags, tolerances=tol,
        diameter=None if profile is None else profile.diameter, diagnostics=diagnostics,
    )

    if graph is not None:
        ia = intersection_array(graph, profile)
        result.intersection_array = str(ia) if isinstance(ia, IntersectionArray) else None

    drg = bounds[0].equality
    if drg is None:
        return result
    tags["distance_regular"] = drg
    tags["bipartite"] = _is_bipartite_spectrum(s, 1e-8 * max(1.0, s.degree))

    if graph is not None:
        result.oracle_agrees = drg == (result.intersection_array is not None)
        if not result.oracle_agrees:
            diagnostics.append(
                "spectral excess verdict disagrees with the combinatorial intersection-array test"
            )

    if not drg:
        for key in TAGS:
            if key not in ("distance_regular", "bipartite"):
                tags[key] = False
        return result

    # distance-regular from here on: p_d(lambda_i) are the distance-d eigenvalues
    prods = s.mults * s.pis
    partition = {}
    for label, H in (("even", th.even_indices(d)), ("odd", th.odd_indices(d))):
        by_values = _group_equal(H, pd, tol.values)
        by_prods = _group_equal(H, prods, tol.values)
        if sorted(map(tuple, by_values)) != sorted(map(tuple, by_prods)):
            diagnostics.append(
                f"{label} classes from p_d values {by_values} differ from m_i*pi_i classes {by_prods}"
            )
        partition[label] = by_values
    result.partition = partition
    distinct = len(_group_equal(range(d + 1), pd, tol.values))
    result.predicted_kneser_eigenvalue_count = distinct
    tags["partially_antipodal"] = distinct < d + 1
    tags["half_antipodal"] = bool(half.equality)

    if d == 1:
        # complete graph: the distance-1 graph is itself a single clique
        tags["antipodal"] = True
        tags["bipartite_not_antipodal"] = False
        tags["kneser_strongly_regular"] = True
    else:
        tags["kneser_strongly_regular"] = bool(srg.equality)
        eq_at = [b.equality for b in case0]
        if any(eq_at[:-1]):
            tags["antipodal"] = True
            tags["bipartite_not_antipodal"] = False
            if not all(eq_at):
                diagnostics.append(
                    f"case-0 equality at indices {[i + 1 for i, e in enumerate(eq_at) if e]} "
                    "but not at all of 1..d"
                )
        else:
            tags["antipodal"] = False
            tags["bipartite_not_antipodal"] = bool(eq_at[-1])
        if tags["bipartite_not_antipodal"] and not tags["bipartite"]:
            diagnostics.append("case-0 bound says bipartite but the spectrum is not symmetric")

    if graph is not None:
        kg = distance_graph(graph, d, profile)
        eigs = np.linalg.eigvalsh(kg.matrix())[::-1]
        tol_c = tol.cluster or 1e-7 * max(1.0, abs(eigs[0]))
        result.kneser_eigenvalue_count = len(cluster_eigenvalues(eigs, tol_c)[0])
        if result.kneser_eigenvalue_count != distinct:
            diagnostics.append(
                f"distance-{d} graph has {result.kneser_eigenvalue_count} distinct eigenvalues, "
                f"predistance values predict {distinct}"
            )
        result.pd_matrix_residual = float(
            np.abs(eval_poly_on_graph(system.p[-1], graph) - kg.matrix()).max()
        )
        combinatorial = {
            "antipodal": _kneser_antipodal(kg),
            "bipartite": _graph_is_bipartite(graph, profile.dist),
        }
        for key, value in combinatorial.items():
            if tags[key] != value:
                diagnostics.append(f"spectral tag {key}={tags[key]} but BFS says {value}")
    return result


def spectrum_only(s: Spectrum, kd_mean=None, sd1_mean=None, name=None, **kwargs) -> Classification:
    return classify(spectrum_input=SpectrumInput(s, kd_mean, sd1_mean, name), **kwargs)


__all__ = ["Classification", "TAGS", "Tolerances", "classify", "spectrum_only", "InvalidIndexSet"]
