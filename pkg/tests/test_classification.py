"""Derived-equation chains, the nonexistence certificate, and classification."""

import math

import numpy as np
import numpy.testing as npt
import pytest

import quadric as q
from quadric import ExcludedParameterError
from quadric.classification import affine_pair_matrices, _quadratic_roots


def quadratic_root_candidate(m, alpha, seed=0):
    """Identity-conjugation candidate whose shape spectrum solves the affine pair."""
    rng = np.random.default_rng(seed)
    hi, lo = _quadratic_roots(alpha)
    values = [float(rng.choice([hi, lo])) for _ in range(2 * (m - 1))]
    return q.build_principal_candidate(m, alpha, values, pair=False, identity_conjugation=True)


class TestChainResiduals:
    def test_identity_conjugation_contradiction(self):
        """Affine-pair residuals coincide, the pair is solvable, and the trace
        of the forced identity block contradicts the trace-free conjugation."""
        m = 4
        cand = quadratic_root_candidate(m, 1.5)
        rep = q.principal_chain_residuals(cand)
        assert rep.residuals["affine_a"] == rep.residuals["affine_b"]
        assert rep.residuals["affine_a"] < 1e-10
        assert rep.conjugation_defect < 1e-14
        assert rep.trace_on_c == pytest.approx(2 * m - 2)
        assert rep.verdict.startswith("contradiction")

    def test_generic_paired_candidate_fails_commutator_equation(self):
        """No consistent shape operator satisfies the full chain: for a generic
        paired spectrum the commutator equation has an order-one residual."""
        cand = q.build_principal_candidate(3, 1.0, [0.7, -1.3])
        rep = q.principal_chain_residuals(cand)
        assert rep.residuals["hopf_identity"] < 1e-11
        assert rep.residuals["commutator"] > 0.1
        assert rep.verdict == "consistent"

    def test_reduction_is_exact_for_any_principal_candidate(self):
        cand = q.build_principal_candidate(5, -0.8, [0.3, 1.9, -2.0, 0.9])
        rep = q.principal_chain_residuals(cand)
        assert rep.residuals["reeb_reduction"] < 1e-12

    def test_reeb_parallel_candidate_satisfies_first_order_chain(self):
        """The first-order equations admit pointwise solutions; the affine pair
        (which encodes the conjugation-derivative constraint) still fails."""
        cand = q.reeb_parallel_principal_candidate(4, 1.5)
        rep = q.principal_chain_residuals(cand)
        assert rep.residuals["shape_derivative"] < 1e-11
        assert rep.residuals["first_combination"] < 1e-11
        assert rep.residuals["commutator"] < 1e-11
        assert rep.residuals["hopf_identity"] < 1e-11
        assert min(rep.residuals["affine_a"], rep.residuals["affine_b"]) > 0.1
        assert rep.verdict == "consistent"

    def test_zero_alpha_rejected(self):
        model_free = q.build_tube(2, math.pi / 4.0, non_vanishing=False).h
        cand = q.PrincipalCandidate(h=model_free, conj_c=model_free.model.A, imposed=())
        with pytest.raises(ExcludedParameterError):
            q.principal_chain_residuals(cand)


class TestAffinePairAlgebra:
    def test_difference_identity_for_any_inputs(self):
        """E_a - E_b = 4 alpha (A - I) regardless of the shape block."""
        rng = np.random.default_rng(3)
        n = 8
        for alpha in (0.5, -1.7, 2.2):
            raw = rng.standard_normal((n, n))
            S = 0.5 * (raw + raw.T)
            A = np.diag(rng.choice([-1.0, 1.0], size=n))
            e_a, e_b = affine_pair_matrices(alpha, S, A)
            npt.assert_allclose(e_a - e_b, 4.0 * alpha * (A - np.eye(n)), atol=1e-12)

    def test_conjugation_transport_with_fixed_range_shape(self):
        """With the shape operator mapping into the conjugation-fixed block,
        conjugating the first affine equation reproduces the second."""
        cand = q.build_principal_candidate(
            4, 1.1, [0.6, -0.4, 1.3], fix_conjugation_range=True
        )
        h = cand.h
        C = cand.complex_subbundle_frame()
        A_c = q.restrict_to_frame(h.conj, C)
        S_c = q.restrict_to_frame(h.S, C)
        e_a, e_b = affine_pair_matrices(h.alpha, S_c, A_c)
        npt.assert_allclose(A_c @ e_a, e_b, atol=1e-12)
        # the substitution that powers the transport: A S = S on the subbundle
        npt.assert_allclose(A_c @ S_c, S_c, atol=1e-14)


class TestNonexistenceCertificate:
    def test_canned_curvatures_m3(self):
        rep = q.principal_nonexistence_certificate(3, [0.5, -0.5, 1.0, -1.0, 2.0])
        assert rep.all_passed
        assert rep.params["forced_trace_on_c"] == 4.0
        contradictions = [c for c in rep.checks if c.name.startswith("contradiction")]
        assert len(contradictions) == 5
        assert all(c.passed for c in contradictions)

    def test_random_curvatures_m5(self):
        rng = np.random.default_rng(77)
        alphas = [float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0])) for _ in range(25)]
        rep = q.principal_nonexistence_certificate(5, alphas)
        assert rep.all_passed
        assert rep.params["forced_trace_on_c"] == 8.0

    def test_model_trace_check_present(self):
        rep = q.principal_nonexistence_certificate(3, [1.0])
        trace_checks = [c for c in rep.checks if c.name == "model_conjugation_trace"]
        assert len(trace_checks) == 1 and trace_checks[0].residual == 0.0

    def test_zero_alpha_sample_rejected(self):
        with pytest.raises(ExcludedParameterError):
            q.principal_nonexistence_certificate(3, [1.0, 0.0])


class TestClassify:
    @pytest.mark.parametrize("k", [2, 3])
    def test_round_trip_on_grid(self, k):
        for r in q.default_radius_grid(10):
            res = q.classify(q.build_tube(k, r).h)
            assert res.verdict == "tube"
            assert res.k == k
            assert abs(res.r - r) < 1e-9

    def test_recover_radius_branches(self):
        """The curvature-to-radius inversion lands on the correct side of pi/4."""
        assert q.recover_radius(2.0 / math.tan(1.2)) == pytest.approx(0.6, abs=1e-12)
        assert q.recover_radius(2.0 / math.tan(0.4)) == pytest.approx(0.2, abs=1e-12)
        assert q.recover_radius(1.0) < math.pi / 4.0 < q.recover_radius(-1.0)

    def test_vanishing_reeb_curvature_outside(self):
        h = q.build_tube(2, math.pi / 4.0, non_vanishing=False).h
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "vanishing geodesic Reeb flow" in res.reason

    def test_non_hopf_outside(self):
        model = q.build_tangent_model(3)
        rng = np.random.default_rng(31)
        raw = rng.standard_normal((6, 6))
        h = q.induce_from_normal(model, model.zvec(1), 0.5 * (raw + raw.T))
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "not Hopf" in res.reason

    def test_principal_reeb_parallel_is_nonexistent(self):
        cand = q.reeb_parallel_principal_candidate(4, 1.2)
        res = q.classify(cand.h)
        assert res.verdict == "nonexistent"
        assert res.singular_type == "A-principal"

    def test_broken_isometric_flow_outside(self):
        h = q.perturbed_tube(2, 0.6, np.random.default_rng(41))
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "not Reeb parallel" in res.reason

    def test_generic_normal_outside(self):
        h = q.random_hopf_data(4, np.random.default_rng(51), kind="generic")
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "not singular" in res.reason

    def test_odd_dimension_has_no_tube(self):
        """Consistent isotropic data in odd complex dimension is flagged."""
        model = q.build_tangent_model(3)
        N = q.isotropic_vector(model)
        xi = -(model.J @ N)
        alpha = 0.9
        lam = 0.5 * (alpha + math.sqrt(alpha**2 + 4.0))  # isometric-flow value
        z3 = model.zvec(3)
        jz3 = model.jzvec(3)
        S = alpha * np.outer(xi, xi) + lam * (np.outer(z3, z3) + np.outer(jz3, jz3))
        h = q.induce_from_normal(model, N, S)
        assert q.reeb_parallel_residual(h) < 1e-10
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "complex dimension 3" in res.reason

    def test_spectrum_mismatch_outside(self):
        """Isotropic and Reeb parallel, but both invariant blocks share one
        curvature branch, so the tube multiplicities cannot match."""
        model = q.build_tangent_model(4)
        N = q.isotropic_vector(model)
        xi = -(model.J @ N)
        alpha = 0.9
        lam = 0.5 * (alpha + math.sqrt(alpha**2 + 4.0))  # isometric-flow value
        S = alpha * np.outer(xi, xi)
        for i in (3, 4):
            S += lam * (
                np.outer(model.zvec(i), model.zvec(i))
                + np.outer(model.jzvec(i), model.jzvec(i))
            )
        h = q.induce_from_normal(model, N, S)
        assert q.reeb_parallel_residual(h) < 1e-10
        res = q.classify(h)
        assert res.verdict == "outside-hypotheses"
        assert "spectrum" in res.reason
