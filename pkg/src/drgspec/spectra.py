"""Adjacency spectra: eigensolving, clustering into distinct eigenvalues, pi products."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ClusterAmbiguity,
    DegenerateSpectrum,
    InvariantViolation,
    NonConvergence,
    NonIntegerMultiplicity,
    NotRegular,
)
from .graphcore import Graph


def default_tol_cluster(lambda0: float) -> float:
    return 1e-7 * max(1.0, abs(lambda0))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Distinct eigenvalues ``lambdas[0] > ... > lambdas[d]`` with multiplicities.

    Construct through :func:`make_spectrum`, which checks the invariants of a
    connected regular graph's spectrum and computes the pi products.
    """

    lambdas: np.ndarray
    mults: np.ndarray
    pis: np.ndarray

    @property
    def n(self) -> int:
        return int(self.mults.sum())

    @property
    def d(self) -> int:
        return len(self.lambdas) - 1

    @property
    def degree(self) -> float:
        return float(self.lambdas[0])

    def pairs(self) -> list[tuple[float, int]]:
        return [(float(v), int(m)) for v, m in zip(self.lambdas, self.mults)]

    def __repr__(self):
        body = ", ".join(f"{v:.6g}^{m}" for v, m in self.pairs())
        return f"Spectrum({body})"


def pi_products(lambdas: Sequence[float], tol_cluster: Optional[float] = None) -> np.ndarray:
    """``pi_i = prod_{j != i} |lambda_i - lambda_j|`` over distinct eigenvalues."""
    lam = np.asarray(lambdas, dtype=np.float64)
    if tol_cluster is None:
        tol_cluster = default_tol_cluster(lam.max() if lam.size else 1.0)
    gaps = np.abs(lam[:, None] - lam[None, :])
    np.fill_diagonal(gaps, 1.0)
    if lam.size > 1 and gaps.min() < tol_cluster:
        raise DegenerateSpectrum(f"eigenvalues closer than {tol_cluster:g}")
    return gaps.prod(axis=1)


def _check_invariants(lam, mults, n_stated=None, check_regular=True):
    n = int(mults.sum())
    if n_stated is not None and n != n_stated:
        raise InvariantViolation(f"multiplicities sum to {n}, document states n={n_stated}")
    if (mults < 1).any():
        raise InvariantViolation("multiplicities must be positive")
    if (np.diff(lam) >= 0).any():
        raise InvariantViolation("eigenvalues must be distinct")
    if mults[0] != 1:
        raise InvariantViolation(
            f"largest eigenvalue has multiplicity {mults[0]}; graph is not connected"
        )
    if check_regular:
        k = lam[0]
        trace = float((mults * lam).sum())
        if abs(trace) > 1e-6 * n:
            raise InvariantViolation(f"trace sum(m_i lambda_i) = {trace:g}, expected 0")
        edges2 = float((mults * lam**2).sum())
        if abs(edges2 - n * k) > 1e-6 * n * max(k, 1.0):
            raise InvariantViolation(
                f"sum(m_i lambda_i^2) = {edges2:g} differs from n*lambda_0 = {n * k:g}"
            )


def make_spectrum(lambdas, mults, n=None, check_regular=True) -> Spectrum:
    """Validated :class:`Spectrum` from distinct values and multiplicities (any order)."""
    lam = np.asarray(lambdas, dtype=np.float64)
    m = np.asarray(mults)
    if m.dtype.kind == "f":
        if not np.all(m == np.round(m)):
            raise NonIntegerMultiplicity(f"non-integer multiplicity in {m.tolist()}")
    m = m.astype(np.int64)
    order = np.argsort(-lam, kind="stable")
    lam, m = lam[order], m[order]
    _check_invariants(lam, m, n_stated=n, check_regular=check_regular)
    pis = pi_products(lam)
    for arr in (lam, m, pis):
        arr.setflags(write=False)
    return Spectrum(lambdas=lam, mults=m, pis=pis)


def _round_robin(m):
    """Rounds of disjoint index pairs covering all pairs of ``range(m)`` (m even)."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append([(players[i], players[m - 1 - i]) for i in range(m // 2)])
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Uses the round-robin ordering, so each round applies ``n/2`` disjoint
    rotations at once. Stops when the off-diagonal Frobenius norm drops
    below ``tol * ||a||_F``. Returned in descending order.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()
    m = n + (n % 2)
    if m != n:
        # pad to even size with a decoupled zero row/column
        a = np.pad(a, ((0, 1), (0, 1)))
    rounds = [(np.array([p for p, _ in r]), np.array([q for _, q in r])) for r in _round_robin(m)]
    scale = np.linalg.norm(a)
    threshold = tol * max(scale, 1.0)

    def off(x):
        return math.sqrt(max(float((x**2).sum() - (np.diag(x) ** 2).sum()), 0.0))

    for _ in range(max_sweeps):
        if off(a) <= threshold:
            break
        for P, Q in rounds:
            apq = a[P, Q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            P, Q, apq = P[active], Q[active], apq[active]
            theta = (a[Q, Q] - a[P, P]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta**2 + 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t**2 + 1.0)
            s = t * c
            cols_p, cols_q = a[:, P].copy(), a[:, Q].copy()
            a[:, P] = c * cols_p - s * cols_q
            a[:, Q] = s * cols_p + c * cols_q
            rows_p, rows_q = a[P, :].copy(), a[Q, :].copy()
            a[P, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[Q, :] = s[:, None] * rows_p + c[:, None] * rows_q
    else:
        residual = off(a)
        if residual > threshold:
            raise NonConvergence(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {residual:.3e})",
                residual=residual,
            )
    # the padding index never couples, so it is simply cut off
    eigs = np.diag(a)[:n].copy()
    return np.sort(eigs)[::-1]


def symmetric_eigenvalues(g: Graph, method: str = "lapack") -> np.ndarray:
    """All adjacency eigenvalues of a connected regular graph, descending.

    ``method="lapack"`` calls :func:`numpy.linalg.eigvalsh`;
    ``method="jacobi"`` uses :func:`jacobi_eigenvalues` (slow beyond a few
    hundred vertices, but independent of LAPACK).
    """
    if not g.is_regular():
        raise NotRegular(f"{g!r} is not regular")
    a = g.matrix(np.float64)
    if method == "lapack":
        eigs = np.linalg.eigvalsh(a)[::-1]
    elif method == "jacobi":
        eigs = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return np.ascontiguousarray(eigs)


def cluster_eigenvalues(eigs, tol_cluster: float):
    """Greedy gap clustering of a descending eigenvalue list.

    Returns ``(values, mults)``: cluster means and cluster sizes. Raises
    :class:`ClusterAmbiguity` when some gap lies in
    ``[0.5 * tol_cluster, 2 * tol_cluster]``.
    """
    e = np.asarray(eigs, dtype=np.float64)
    if e.size == 0:
        return np.zeros(0), np.zeros(0, dtype=np.int64)
    if (np.diff(e) > 0).any():
        raise ValueError("eigenvalues must be sorted in descending order")
    gaps = -np.diff(e)
    straddle = (gaps >= 0.5 * tol_cluster) & (gaps <= 2.0 * tol_cluster)
    if straddle.any():
        g = gaps[straddle][0]
        raise ClusterAmbiguity(
            f"eigenvalue gap {g:.3e} is within a factor 2 of tol_cluster={tol_cluster:.3e}"
        )
    breaks = np.flatnonzero(gaps > tol_cluster) + 1
    groups = np.split(e, breaks)
    values = np.array([grp.mean() for grp in groups])
    mults = np.array([len(grp) for grp in groups], dtype=np.int64)
    return values, mults


def cluster_spectrum(eigs, n: Optional[int] = None, tol_cluster: Optional[float] = None) -> Spectrum:
    e = np.asarray(eigs, dtype=np.float64)
    if n is not None and len(e) != n:
        raise InvariantViolation(f"expected {n} eigenvalues, got {len(e)}")
    if tol_cluster is None:
        tol_cluster = default_tol_cluster(e[0])
    values, mults = cluster_eigenvalues(e, tol_cluster)
    return make_spectrum(values, mults, n=len(e))


def graph_spectrum(g: Graph, tol_cluster: Optional[float] = None, method: str = "lapack") -> Spectrum:
    return cluster_spectrum(symmetric_eigenvalues(g, method=method), g.n, tol_cluster)


@dataclass(frozen=True, eq=False)
class SpectrumInput:
    """A spectrum document: the spectrum plus optional observed means."""

    spectrum: Spectrum
    kd_mean: Optional[float] = None
    sd1_mean: Optional[float] = None
    name: Optional[str] = None


def load_spectrum_input(doc) -> SpectrumInput:
    """Validate a spectrum document (a mapping, or its JSON text).

    Schema::

        {"name": "wells",                      # optional
         "n": 32,                              # optional, checked against sum of multiplicities
         "eigenvalues": [{"value": 5, "multiplicity": 1}, ...],
         "kd_mean": 1,                         # optional mean number of vertices at distance d
         "sd1_mean": 31}                       # optional mean number within distance d-1
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise InvariantViolation(f"spectrum document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "eigenvalues" not in doc:
        raise InvariantViolation("spectrum document needs an 'eigenvalues' list")
    values, mults = [], []
    for entry in doc["eigenvalues"]:
        try:
            v, m = entry["value"], entry["multiplicity"]
        except (KeyError, TypeError) as exc:
            raise InvariantViolation(f"bad eigenvalue entry {entry!r}") from exc
        if isinstance(m, bool) or not isinstance(m, (int, float)) or m != int(m):
            raise NonIntegerMultiplicity(f"multiplicity {m!r} is not an integer")
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InvariantViolation(f"eigenvalue {v!r} is not a number")
        values.append(float(v))
        mults.append(int(m))
    spectrum = make_spectrum(values, mults, n=doc.get("n"))
    kd = doc.get("kd_mean")
    sd = doc.get("sd1_mean")
    return SpectrumInput(
        spectrum=spectrum,
        kd_mean=None if kd is None else float(kd),
        sd1_mean=None if sd is None else float(sd),
        name=doc.get("name"),
    )


def spectrum_document(s: Spectrum, kd_mean=None, sd1_mean=None, name=None) -> dict:
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["n"] = s.n
    doc["eigenvalues"] = [{"value": v, "multiplicity": m} for v, m in s.pairs()]
    if kd_mean is not None:
        doc["kd_mean"] = kd_mean
    if sd1_mean is not None:
        doc["sd1_mean"] = sd1_mean
    return doc
