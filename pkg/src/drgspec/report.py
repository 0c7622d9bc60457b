"""JSON and text rendering of a :class:`~drgspec.classify.Classification`.

Floats are rounded to 12 significant digits; magnitudes below 1e-9 are
written as 0 so that round-off residuals do not make reports machine
dependent.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .classify import Classification

SCHEMA = "drgspec.analysis/1"
SIG_DIGITS = 12
ZERO_SNAP = 1e-9


def fmt_float(x):
    if x is None:
        return None
    x = float(x)
    if not math.isfinite(x):
        return None
    if abs(x) < ZERO_SNAP:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    return obj


def report_dict(c: Classification) -> dict:
    s = c.spectrum
    bounds = []
    for b in c.bounds:
        entry = {
            "bound": b.bound_name,
            "index_set": list(b.index_set),
            "lhs": b.lhs,
            "rhs": b.rhs,
            "equality": b.equality,
            "classification": b.classification,
        }
        for key in ("t0", "phi_max"):
            if key in b.extra:
                entry[key] = b.extra[key]
        bounds.append(entry)
    doc = {
        "schema": SCHEMA,
        "input": {"source": c.source, "name": c.name},
        "spectrum": {
            "n": s.n,
            "d": s.d,
            "eigenvalues": [
                {"value": v, "multiplicity": m, "pi": p}
                for (v, m), p in zip(s.pairs(), s.pis.tolist())
            ],
        },
        "means": {"diameter": c.diameter, "kd_mean": c.kd_mean, "sd1_mean": c.sd1_mean},
        "spectral_excess": c.excess,
        "pd_values": c.pd_values.tolist(),
        "bounds": bounds,
        "tags": dict(c.tags),
        "partition": c.partition,
        "oracle": {
            "intersection_array": c.intersection_array,
            "agrees": c.oracle_agrees,
            "kneser_eigenvalue_count": c.kneser_eigenvalue_count,
            "predicted_kneser_eigenvalue_count": c.predicted_kneser_eigenvalue_count,
            "pd_matrix_residual": c.pd_matrix_residual,
        },
        "diagnostics": list(c.diagnostics),
        "tolerances": {"eq": c.tolerances.eq, "cluster": c.tolerances.cluster},
    }
    return _clean(doc)


def to_json(c: Classification) -> str:
    return json.dumps(report_dict(c), indent=2) + "\n"


def _g(x):
    return "-" if x is None else f"{x:.{SIG_DIGITS}g}"


def to_text(c: Classification) -> str:
    s = c.spectrum
    lines = [f"input: {c.name or '(unnamed)'} [{c.source}]"]
    spec = ", ".join(f"{_g(v)}^{m}" for v, m in s.pairs())
    lines.append(f"spectrum: n={s.n} d={s.d} {{{spec}}}")
    lines.append(f"pi: {', '.join(_g(p) for p in s.pis)}")
    if c.diameter is not None:
        lines.append(f"diameter: {c.diameter}")
    lines.append(f"mean k_d: {_g(c.kd_mean)}   mean s_(d-1): {_g(c.sd1_mean)}")
    lines.append(f"spectral excess p_d(lambda_0): {_g(c.excess)}")
    lines.append(f"p_d values: {', '.join(_g(fmt_float(v)) for v in c.pd_values)}")
    lines.append("bounds:")
    for b in c.bounds:
        verdict = {True: "equality", False: "strict", None: "indeterminate"}[b.equality]
        extra = ""
        if "phi_max" in b.extra:
            extra = f"  t0={_g(fmt_float(b.extra['t0']))} phi_max={_g(fmt_float(b.extra['phi_max']))}"
        tag = f"  [{b.classification}]" if b.classification else ""
        lines.append(
            f"  {b.bound_name:<15} H={list(b.index_set)!s:<16} lhs={_g(b.lhs):<14} "
            f"rhs={_g(fmt_float(b.rhs)):<14} {verdict}{tag}{extra}"
        )
    if c.intersection_array is not None or c.source == "graph":
        lines.append(f"intersection array: {c.intersection_array or 'none (not distance-regular)'}")
    if c.partition is not None:
        lines.append(f"equal p_d classes: even {c.partition['even']}  odd {c.partition['odd']}")
    if c.kneser_eigenvalue_count is not None:
        lines.append(
            f"distance-d graph distinct eigenvalues: {c.kneser_eigenvalue_count} "
            f"(predicted {c.predicted_kneser_eigenvalue_count})"
        )
    lines.append("verdicts:")
    for key, value in c.tags.items():
        shown = "indeterminate" if value is None else ("yes" if value else "no")
        lines.append(f"  {key}: {shown}")
    for msg in c.diagnostics:
        lines.append(f"diagnostic: {msg}")
    return "\n".join(lines) + "\n"
