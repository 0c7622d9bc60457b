"""Acceptance criteria 1-7.

Each test records a one-line verdict in ``conftest.ACCEPTANCE_RESULTS``;
the terminal summary prints them as ``[PASS|FAIL] criterion N: ...``.
"""

import itertools

import numpy as np

import conftest
from conftest import SQRT5, WELLS, family, family_spectrum, fixture_spectra, random_non_drg
from drgspec.classify import classify, spectrum_only
from drgspec.graphcore import distance_graph, distance_profile, intersection_array
from drgspec.polyengine import eval_poly_on_graph, multiplicity_identity_residual, predistance_system, spectral_excess
from drgspec.spectra import cluster_eigenvalues, graph_spectrum, make_spectrum
from drgspec.theorems import (
    DEFAULT_TOL_EQ,
    case0_bound,
    equal_pd_condition,
    equal_pd_values,
    phi_coefficients,
    spectral_excess_check,
    theorem2_bound,
    theorem2_rhs,
)

TOL_EQ = DEFAULT_TOL_EQ


class Checks:
    """Collects named boolean checks; the test fails listing every failed one."""

    def __init__(self, key, title):
        self.key, self.title, self.failed = key, title, []

    def __call__(self, ok, label):
        if not ok:
            self.failed.append(label)

    def finish(self):
        ok = not self.failed
        text = self.title if ok else f"{self.title} -- failed: {'; '.join(self.failed)}"
        conftest.ACCEPTANCE_RESULTS[self.key] = (ok, text)
        assert ok, text


def run_guarded(checks, fn):
    try:
        fn()
    except Exception as exc:  # record, then fail
        checks(False, f"{type(exc).__name__}: {exc}")
    checks.finish()


def close(a, b, tol):
    return abs(a - b) <= tol


def test_criterion_1_odd5():
    c = Checks(1, "odd graph O5: spectrum, k_4=60, H={2,4} t0=6 phi=66 rhs=60 equality, H={1,3} strict")

    def body():
        g = family("odd:5")
        s = graph_spectrum(g)
        c(s.mults.tolist() == [1, 27, 42, 48, 8], f"multiplicities {s.mults.tolist()}")
        c(np.abs(s.lambdas - [5, 3, 1, -2, -4]).max() <= 1e-8, f"values {s.lambdas}")
        prof = distance_profile(g)
        c((prof.k_of[:, 4] == 60).all(), "k_4(u) not 60 for every u")
        kd = prof.kbar_at(4)
        coeffs = phi_coefficients(s, (2, 4))
        c(close(coeffs.t0, 6.0, 1e-6), f"t0={coeffs.t0}")
        c(close(coeffs.phi(coeffs.t0), 66.0, 1e-6), f"phi(t0)={coeffs.phi(coeffs.t0)}")
        b = theorem2_bound(s, (2, 4), kd, TOL_EQ)
        c(close(b.rhs, 60.0, 1e-6 * 60), f"rhs={b.rhs}")
        c(b.equality is True, "H={2,4} equality not reported")
        pd = predistance_system(s).pd_values
        c(abs(pd[2] - pd[4]) <= 1e-8 * abs(pd[2]), f"p_4 values {pd}")
        odd = theorem2_bound(s, (1, 3), kd, TOL_EQ)
        c(odd.equality is False and odd.lhs < odd.rhs, f"H={{1,3}} rhs={odd.rhs}")

    run_guarded(c, body)


def test_criterion_2_wells():
    c = Checks(2, "Wells spectrum: phi_max=31 at t0=+1/-1, case0 rhs=1 for i=1..4, antipodal + strongly regular distance-4 graph")

    def body():
        s = make_spectrum(*WELLS)
        for H, t0 in (((2, 4), 1.0), ((1, 3), -1.0)):
            co = phi_coefficients(s, H)
            c(close(co.phi_max, 31.0, 1e-6), f"H={H} phi_max={co.phi_max}")
            c(co.t0 is not None and close(co.t0, t0, 1e-6), f"H={H} t0={co.t0}")
        for i in range(1, 5):
            rhs = case0_bound(s, i, 1.0, TOL_EQ).rhs
            c(close(rhs, 1.0, 1e-6), f"case0 rhs({i})={rhs}")
        res = spectrum_only(s, kd_mean=1.0, name="wells")
        c(res.tags["antipodal"] is True, "antipodal tag missing")
        c(res.tags["kneser_strongly_regular"] is True, "strongly regular tag missing")
        c(abs(s.lambdas[1] - SQRT5) < 1e-12, "sqrt(5) eigenvalue")

    run_guarded(c, body)


def test_criterion_3_fq10():
    c = Checks(3, "folded 10-cube: spectrum, case0 rhs (234.16, 293.36, 293.36, 234.16, 126.00), k_5=126, bipartite not antipodal")

    def body():
        g = family("folded_hypercube:10")
        res = classify(g)
        s = res.spectrum
        c(s.mults.tolist() == [1, 45, 210, 210, 45, 1], f"multiplicities {s.mults.tolist()}")
        c(np.abs(s.lambdas - [10, 6, 2, -2, -6, -10]).max() <= 1e-8, f"values {s.lambdas}")
        rhs = [res.bound("case0", (i,)).rhs for i in range(1, 6)]
        want = [234.16, 293.36, 293.36, 234.16, 126.00]
        c(all(close(a, b, 0.01) for a, b in zip(rhs, want)), f"case0 rhs {np.round(rhs, 4)}")
        c(res.kd_mean == 126, f"k_5={res.kd_mean}")
        c(res.tags["bipartite"] is True, "bipartite tag missing")
        c(res.tags["antipodal"] is False, "antipodal tag set")
        c(res.tags["bipartite_not_antipodal"] is True, "bipartite_not_antipodal tag missing")

    run_guarded(c, body)


def test_criterion_4_spectral_excess():
    c = Checks(4, "spectral excess = k_d on 6 DRG families; >=10 random regular non-DRGs strict with slack > tol_eq; intersection-array oracle agrees")

    def body():
        for spec in ("petersen", "cycle:6", "hypercube:3", "complete:7", "hamming:2,3", "johnson:5,2"):
            g = family(spec)
            s = family_spectrum(spec)
            kd = distance_profile(g).kbar_at(s.d)
            ex = spectral_excess(s)
            c(abs(ex - kd) <= 1e-8 * kd, f"{spec}: excess {ex} vs k_d {kd}")
            c(bool(intersection_array(g)), f"{spec}: intersection array missing")
            c(spectral_excess_check(s, kd, TOL_EQ).equality is True, f"{spec}: no equality")
        graphs = random_non_drg()
        c(len(graphs) >= 10, f"only {len(graphs)} random non-DRGs")
        for g in graphs:
            s = graph_spectrum(g)
            kd = distance_profile(g).kbar_at(s.d)
            b = spectral_excess_check(s, kd, TOL_EQ)
            c(b.equality is False and b.slack > TOL_EQ * b.rhs,
              f"{g.name}: lhs={b.lhs} rhs={b.rhs}")
            c(not intersection_array(g), f"{g.name}: intersection array found")

    run_guarded(c, body)


def test_criterion_5_predistance():
    c = Checks(5, "predistance polynomials: orthogonal, normalised, multiplicity identity, sign pattern, q-chain, H(A)=J")

    def body():
        for label, s in fixture_spectra():
            sys_ = predistance_system(s)
            v = sys_.values
            gram = (v * s.mults) @ v.T / s.n
            diag = np.diag(gram)
            c(np.abs(gram - np.diag(diag)).max() <= 1e-8 * diag.max(), f"{label}: orthogonality")
            c(np.all(np.abs(diag - v[:, 0]) <= 1e-8 * v[:, 0]), f"{label}: normalisation")
            c(multiplicity_identity_residual(sys_, s) <= 1e-8, f"{label}: multiplicity identity")
            c((np.sign(sys_.pd_values) == (-1.0) ** np.arange(s.d + 1)).all(), f"{label}: sign pattern")
            q0 = sys_.q_values[:, 0]
            c((np.diff(q0) > 0).all() and abs(q0[-1] - s.n) <= 1e-8 * s.n, f"{label}: q-chain {q0}")
        for spec in conftest.DRG_FAMILIES + ["prism", "circulant"]:
            g = {"prism": conftest.prism, "circulant": lambda: conftest.circulant(10, [1, 2])}.get(
                spec, lambda: family(spec))()
            h = predistance_system(graph_spectrum(g)).hoffman
            err = np.abs(eval_poly_on_graph(h, g) - 1.0).max()
            c(err <= 1e-8, f"{spec}: |H(A)-J| = {err:.2e}")

    run_guarded(c, body)


def valid_sets(d):
    for parity in (0, 1):
        members = [i for i in range(1, d + 1) if i % 2 == parity]
        for r in range(1, len(members) + 1):
            yield from itertools.combinations(members, r)


def test_criterion_6_consistency():
    c = Checks(6, "n - phi_max = index-set rhs, singleton sets give the spectral excess, m_i*pi_i test matches p_d values")

    def body():
        fixtures = fixture_spectra()
        pairs = 0
        for label, s in fixtures:
            excess = spectral_excess(s)
            for H in valid_sets(s.d):
                rhs = theorem2_rhs(s, H)
                pm = phi_coefficients(s, H).phi_max
                c(abs((s.n - pm) - rhs) <= 1e-8 * rhs, f"{label} H={H}: n-phi_max={s.n - pm} rhs={rhs}")
                if len(H) == 1:
                    c(abs(rhs - excess) <= 1e-8 * excess, f"{label} H={H}: {rhs} vs excess {excess}")
                pairs += 1
        for spec in conftest.DRG_FAMILIES:
            s = family_spectrum(spec)
            for H in valid_sets(s.d):
                c(equal_pd_condition(s, H) == equal_pd_values(s, H), f"{spec} H={H}: equal-p_d disagreement")
        expected = sum(len(list(valid_sets(s.d))) for _, s in fixtures)
        c(pairs == expected and pairs >= len(fixtures), f"{pairs} of {expected} fixture/H pairs checked")

    run_guarded(c, body)


def distinct_count(g):
    eigs = np.linalg.eigvalsh(g.matrix())[::-1]
    return len(cluster_eigenvalues(eigs, 1e-7 * max(1.0, abs(eigs[0])))[0])


def test_criterion_7_kneser():
    c = Checks(7, "distance-d graph eigenvalues: odd(5) has 4 = distinct p_4 values, hypercube(3) has 2")

    def body():
        g = family("odd:5")
        n_eigs = distinct_count(distance_graph(g, 4))
        pd = predistance_system(family_spectrum("odd:5")).pd_values
        n_pd = len(cluster_eigenvalues(np.sort(pd)[::-1], 1e-7 * abs(pd[0]))[0])
        c(n_eigs == n_pd == 4, f"odd(5): {n_eigs} eigenvalues, {n_pd} distinct p_4 values")
        q3 = distinct_count(distance_graph(family("hypercube:3"), 3))
        c(q3 == 2, f"hypercube(3): {q3} eigenvalues")

    run_guarded(c, body)
