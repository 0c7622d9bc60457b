"""Spectral bounds on the mean number of vertices at maximal distance.

Every bound compares an observed mean (``lhs``) with a quantity computed from
the spectrum alone (``rhs``). The bounds are theorems: ``lhs <= rhs`` for every
connected regular graph, with equality characterising distance-regular graphs
whose distance-d graph has the corresponding eigenvalue coincidences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import BoundViolation, DegreeTooHigh, IndexOutOfRange, InvalidIndexSet
from .polyengine import Poly, inner_product, predistance_system, spectral_excess
from .spectra import Spectrum

DEFAULT_TOL_EQ = 1e-6


def check_index_set(members: Iterable[int], d: int) -> tuple[int, ...]:
    """Validate an index set for the lambda_0-free bounds.

    Members must lie in ``1..d`` and share one parity (the values of p_d
    alternate in sign, so mixed-parity sets can never share a value).
    """
    H = tuple(sorted(set(int(i) for i in members)))
    if not H:
        raise InvalidIndexSet("index set is empty")
    if H[0] < 1 or H[-1] > d:
        raise InvalidIndexSet(f"index set {list(H)} must lie within 1..{d}")
    if len({i % 2 for i in H}) != 1:
        raise InvalidIndexSet(f"index set {list(H)} mixes parities")
    return H


def even_indices(d: int) -> tuple[int, ...]:
    return tuple(range(2, d + 1, 2))


def odd_indices(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 1, 2))


def _label_pd(i: int, d: int) -> str:
    return f"P_{i}{d}" if i < 10 and d < 10 else f"P_{i},{d}"


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    index_set: tuple[int, ...]
    lhs: Optional[float]
    rhs: float
    equality: Optional[bool]
    classification: Optional[str] = None
    extra: dict = field(default_factory=dict)

    @property
    def slack(self) -> Optional[float]:
        return None if self.lhs is None else self.rhs - self.lhs


def _make_report(name, H, lhs, rhs, tol_eq, classification=None, **extra) -> BoundReport:
    if lhs is None:
        return BoundReport(name, H, None, rhs, None, None, extra)
    if lhs > rhs * (1.0 + tol_eq):
        raise BoundViolation(
            f"{name} bound violated for H={list(H)}: observed {lhs!r} > bound {rhs!r}"
        )
    equality = abs(lhs - rhs) <= tol_eq * abs(rhs)
    return BoundReport(name, H, float(lhs), float(rhs), equality,
                       classification if equality else None, extra)


def theorem1_ratio(r: Poly, s: Spectrum, sbar: float, tol_eq: float = DEFAULT_TOL_EQ):
    """``r(lambda_0)^2 / ||r||^2`` and whether it stays below the mean ``sbar``.

    Valid for any nonzero ``r`` of degree at most ``d - 1``; equality
    happens only for multiples of ``q_{d-1}`` on distance-regular graphs.
    """
    r = Poly(r.coef) if isinstance(r, Poly) else Poly(r)
    r = r.trim()
    if r.degree() > s.d - 1:
        raise DegreeTooHigh(f"degree {r.degree()} exceeds d-1 = {s.d - 1}")
    ratio = float(r(s.lambdas[0]) ** 2 / inner_product(r, r, s))
    return ratio, ratio <= sbar * (1.0 + tol_eq)


@dataclass(frozen=True)
class PhiCoefficients:
    """Coefficients of ``phi(t) = n (a t + b)^2 / ((a t + b)^2 + sigma t^2 + gamma)``.

    ``t0`` is the maximiser; it is ``None`` in the degenerate case ``beta == 0``,
    where phi is constant in ``t`` (away from 0) and ``phi_max`` is its supremum.
    """

    alpha: float
    beta: float
    gamma: float
    sigma: float
    n: int
    t0: Optional[float]
    phi_max: float

    @property
    def degenerate(self) -> bool:
        return self.t0 is None

    def phi(self, t):
        t = np.asarray(t, dtype=np.float64)
        num = (self.alpha * t + self.beta) ** 2
        with np.errstate(invalid="ignore", divide="ignore"):
            out = self.n * num / (num + self.sigma * t**2 + self.gamma)
        return out if out.ndim else float(out)

    def phi_max_closed_form(self) -> float:
        a2g = self.alpha**2 * self.gamma
        b2s = self.beta**2 * self.sigma
        return self.n * (a2g + b2s) / (a2g + b2s + self.gamma * self.sigma)


def phi_coefficients(s: Spectrum, H: Iterable[int]) -> PhiCoefficients:
    H = check_index_set(H, s.d)
    ratio = s.pis[0] / s.pis
    weight = ratio**2 / s.mults
    inside = np.zeros(s.d + 1, dtype=bool)
    inside[list(H)] = True
    outside = ~inside
    outside[0] = False

    excess = spectral_excess(s)
    alpha = float(sum((-1) ** (i + 1) * ratio[i] for i in H))
    comp = float(weight[outside].sum())
    beta = -excess * comp
    gamma = -excess * beta
    sigma = float(s.mults[inside].sum())
    if comp == 0.0:
        return PhiCoefficients(alpha, 0.0, 0.0, sigma, s.n, None,
                               s.n * alpha**2 / (alpha**2 + sigma))
    t0 = alpha * gamma / (beta * sigma)
    coeffs = PhiCoefficients(alpha, beta, gamma, sigma, s.n, t0, 0.0)
    return PhiCoefficients(alpha, beta, gamma, sigma, s.n, t0, coeffs.phi(t0))


def theorem2_rhs(s: Spectrum, H: Iterable[int]) -> float:
    """Upper bound on the mean distance-d layer size for index set ``H``.

    The complement sum runs over every index outside ``H``, including 0
    (whose term is exactly 1).
    """
    H = check_index_set(H, s.d)
    ratio = s.pis[0] / s.pis
    weight = ratio**2 / s.mults
    inside = np.zeros(s.d + 1, dtype=bool)
    inside[list(H)] = True
    sigma = float(s.mults[inside].sum())
    return float(s.n * sigma / (ratio[inside].sum() ** 2 + weight[~inside].sum() * sigma))


def theorem2_bound(s: Spectrum, H: Iterable[int], kbar_d: Optional[float],
                   tol_eq: float = DEFAULT_TOL_EQ, name: str = "theorem2") -> BoundReport:
    H = check_index_set(H, s.d)
    rhs = theorem2_rhs(s, H)
    coeffs = phi_coefficients(s, H)
    consistency = abs((s.n - coeffs.phi_max) - rhs) / rhs
    label = " = ".join(_label_pd(i, s.d) for i in H) if len(H) > 1 else None
    if name == "spectral_excess":
        label = "distance-regular"
    elif name == "half_antipodal":
        label = "half-antipodal"
    return _make_report(name, H, kbar_d, rhs, tol_eq, label,
                        t0=coeffs.t0, phi_max=coeffs.phi_max, phi_residual=consistency)


def spectral_excess_check(s: Spectrum, kbar_d: Optional[float],
                          tol_eq: float = DEFAULT_TOL_EQ) -> BoundReport:
    """Distance-regularity test: equality iff ``kbar_d`` equals the spectral excess."""
    return theorem2_bound(s, (s.d,), kbar_d, tol_eq, name="spectral_excess")


def half_antipodal_check(s: Spectrum, kbar_d: Optional[float],
                         tol_eq: float = DEFAULT_TOL_EQ) -> BoundReport:
    return theorem2_bound(s, odd_indices(s.d), kbar_d, tol_eq, name="half_antipodal")


def srg_kneser_rhs(s: Spectrum) -> float:
    """Bound obtained by summing the even-class and odd-class index-set inequalities.

    Writing each inequality as ``D_H <= n sigma_H / kbar_d`` and adding the
    two gives ``kbar_d <= n (n - 1) / (D_even + D_odd)``; the even class is
    ``{2, 4, ...}`` (0 is not a member of either class).
    """
    if s.d < 2:
        raise IndexOutOfRange("the strongly-regular distance-d bound needs d >= 2")
    ratio = s.pis[0] / s.pis
    weight = ratio**2 / s.mults
    total = 0.0
    for H in (even_indices(s.d), odd_indices(s.d)):
        inside = np.zeros(s.d + 1, dtype=bool)
        inside[list(H)] = True
        sigma = s.mults[inside].sum()
        total += ratio[inside].sum() ** 2 + weight[~inside].sum() * sigma
    return float(s.n * (s.n - 1) / total)


def parity_sum_residual(s: Spectrum) -> float:
    """Relative gap between ``sum_even pi_0/pi_i`` and ``sum_odd pi_0/pi_i`` (0 included in even)."""
    ratio = s.pis[0] / s.pis
    even, odd = ratio[0::2].sum(), ratio[1::2].sum()
    return float(abs(even - odd) / max(even, odd))


def srg_kneser_check(s: Spectrum, kbar_d: Optional[float],
                     tol_eq: float = DEFAULT_TOL_EQ) -> BoundReport:
    rhs = srg_kneser_rhs(s)
    return _make_report("srg_kneser", tuple(range(1, s.d + 1)), kbar_d, rhs, tol_eq,
                        "distance-d graph strongly regular",
                        parity_sum_residual=parity_sum_residual(s))


def case0_rhs(s: Spectrum, i: int) -> float:
    if not 1 <= i <= s.d:
        raise IndexOutOfRange(f"index {i} outside 1..{s.d}")
    ratio = s.pis[0] / s.pis
    weight = ratio**2 / s.mults
    others = [j for j in range(1, s.d + 1) if j != i]
    S = float(weight[others].sum())
    m = float(s.mults[i])
    return float(s.n * (m + S) / ((ratio[i] + S) ** 2 + m + S))


def case0_bound(s: Spectrum, i: int, kbar_d: Optional[float],
                tol_eq: float = DEFAULT_TOL_EQ) -> BoundReport:
    """Bound whose equality means ``P_0d = P_id`` (antipodal, or bipartite when i = d)."""
    rhs = case0_rhs(s, i)
    return _make_report("case0", (i,), kbar_d, rhs, tol_eq, f"{_label_pd(0, s.d)} = {_label_pd(i, s.d)}")


def equal_pd_condition(s: Spectrum, H: Iterable[int], rtol: float = 1e-8) -> bool:
    """Whether p_d takes one value on ``H``: true iff ``m_i pi_i`` is constant there."""
    H = check_index_set(H, s.d)
    prods = np.array([s.mults[i] * s.pis[i] for i in H], dtype=np.float64)
    return bool(np.all(np.abs(prods - prods[0]) <= rtol * np.abs(prods).max()))


def equal_pd_values(s: Spectrum, H: Iterable[int], rtol: float = 1e-8) -> bool:
    """Same question answered from the predistance polynomial values."""
    H = check_index_set(H, s.d)
    pd = predistance_system(s).pd_values
    vals = np.array([pd[i] for i in H])
    return bool(np.all(np.abs(vals - vals[0]) <= rtol * max(abs(pd[0]), np.abs(vals).max())))


def equal_pd_defect(s: Spectrum, H: Iterable[int]) -> float:
    """``sum_{i != j in H} (m_i pi_i - m_j pi_j)^2``, normalised by ``max(m_i pi_i)^2``."""
    H = check_index_set(H, s.d)
    prods = np.array([s.mults[i] * s.pis[i] for i in H], dtype=np.float64)
    diff = prods[:, None] - prods[None, :]
    return float((diff**2).sum() / prods.max() ** 2) if math.isfinite(prods.max()) else math.inf
