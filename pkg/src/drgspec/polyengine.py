"""Polynomials over the spectral measure: predistance polynomials and friends.

Polynomials are :class:`numpy.polynomial.Polynomial` objects (ascending
monomial coefficients). Whenever a quantity only needs the values at the
distinct eigenvalues, it reads them from a value table instead of
re-evaluating coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial as Poly

from .errors import IndexOutOfRange, NumericalBreakdown
from .graphcore import Graph
from .spectra import Spectrum

__all__ = [
    "Poly",
    "PredistanceSystem",
    "eval_poly_on_graph",
    "inner_product",
    "inner_product_values",
    "lagrange_value_at_lambda0",
    "lagrange_value_direct",
    "multiplicity_identity_residual",
    "predistance_system",
    "spectral_excess",
]


def inner_product_values(u, v, s: Spectrum) -> float:
    """``(1/n) sum_i m_i u_i v_i`` for value tables on the distinct eigenvalues."""
    return float(np.dot(s.mults * np.asarray(u), np.asarray(v)) / s.n)


def inner_product(p: Poly, q: Poly, s: Spectrum) -> float:
    return inner_product_values(p(s.lambdas), q(s.lambdas), s)


@dataclass(frozen=True, eq=False)
class PredistanceSystem:
    """Predistance polynomials ``p[0..d]``, their partial sums ``q`` and the Hoffman polynomial.

    ``values[i, j]`` holds ``p_i(lambda_j)``.
    """

    p: tuple
    q: tuple
    hoffman: Poly
    values: np.ndarray

    @property
    def d(self) -> int:
        return len(self.p) - 1

    @property
    def pd_values(self) -> np.ndarray:
        return self.values[-1]

    @property
    def q_values(self) -> np.ndarray:
        return np.cumsum(self.values, axis=0)

    @property
    def excess(self) -> float:
        return float(self.values[-1, 0])


def predistance_system(s: Spectrum, breakdown_tol: float = 1e-12) -> PredistanceSystem:
    """Orthogonalise ``1, x, x^2, ...`` against the spectral inner product.

    The degree-i candidate is ``x * p_{i-1}`` (same flag of subspaces as the
    monomials, better conditioned), orthogonalised twice against all
    earlier polynomials, then scaled so that ``||p_i||^2 = p_i(lambda_0)``.
    Coefficients and value tables are updated in lockstep.
    """
    d = s.d
    if d < 1:
        raise IndexOutOfRange("predistance polynomials need at least two distinct eigenvalues")
    lam = s.lambdas
    coeffs = [np.array([1.0])]
    vals = [np.ones(d + 1)]
    for i in range(1, d + 1):
        c = np.concatenate([[0.0], coeffs[-1]])
        v = lam * vals[-1]
        start = np.sqrt(inner_product_values(v, v, s))
        for _ in range(2):
            for cj, vj in zip(coeffs, vals):
                h = inner_product_values(v, vj, s) / inner_product_values(vj, vj, s)
                v = v - h * vj
                c = c - h * np.pad(cj, (0, len(c) - len(cj)))
        norm2 = inner_product_values(v, v, s)
        if np.sqrt(norm2) < breakdown_tol * start:
            raise NumericalBreakdown(
                f"norm of degree-{i} polynomial collapsed to {np.sqrt(norm2):.3e}"
            )
        scale = v[0] / norm2
        coeffs.append(c * scale)
        vals.append(v * scale)

    p = tuple(Poly(c) for c in coeffs)
    q = tuple(Poly(np.sum([np.pad(cj, (0, i + 1 - len(cj))) for cj in coeffs[: i + 1]], axis=0))
              for i in range(d + 1))
    values = np.array(vals)
    values.setflags(write=False)
    return PredistanceSystem(p=p, q=q, hoffman=q[-1], values=values)


def lagrange_value_at_lambda0(s: Spectrum, i: int) -> float:
    """``L_i(lambda_0) = (-1)^(i+1) pi_0 / pi_i`` for the Lagrange polynomial on
    ``lambda_1..lambda_d`` that is 1 at ``lambda_i``."""
    if not 1 <= i <= s.d:
        raise IndexOutOfRange(f"Lagrange index {i} outside 1..{s.d}")
    return (-1) ** (i + 1) * float(s.pis[0] / s.pis[i])


def lagrange_value_direct(s: Spectrum, i: int) -> float:
    """Same value by evaluating the interpolation product directly."""
    if not 1 <= i <= s.d:
        raise IndexOutOfRange(f"Lagrange index {i} outside 1..{s.d}")
    lam = s.lambdas
    others = [j for j in range(1, s.d + 1) if j != i]
    num = np.prod([lam[0] - lam[j] for j in others])
    den = np.prod([lam[i] - lam[j] for j in others])
    return float(num / den)


def multiplicity_identity_residual(sys: PredistanceSystem, s: Spectrum) -> float:
    """Largest relative defect of ``(-1)^i p_d(l_i) pi_i m_i = p_d(l_0) pi_0`` over i >= 1."""
    pd = sys.pd_values
    target = pd[0] * s.pis[0]
    i = np.arange(1, s.d + 1)
    lhs = (-1.0) ** i * pd[i] * s.pis[i] * s.mults[i]
    return float(np.max(np.abs(lhs - target)) / abs(target))


def spectral_excess(s: Spectrum) -> float:
    """``n / sum_i pi_0^2 / (m_i pi_i^2)``, the value p_d(lambda_0) read off the spectrum."""
    ratios = s.pis[0] / s.pis
    return float(s.n / np.sum(ratios**2 / s.mults))


def eval_poly_on_graph(p: Poly, g: Graph) -> np.ndarray:
    """``p(A)`` for the adjacency matrix ``A`` of ``g``, by Horner's rule."""
    a = g.matrix(np.float64)
    out = np.zeros_like(a)
    eye = np.eye(g.n)
    for c in p.coef[::-1]:
        out = out @ a + c * eye
    return out
