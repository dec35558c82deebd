"""Ambient model: structural identities, canonical angles, curvature, Jacobi spectra."""

import math

import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, strategies as st

from quadric import (
    InvalidDimensionError,
    NormalizationError,
    ambient_curvature,
    ambient_jacobi,
    build_tangent_model,
    canonical_angle,
    isotropic_vector,
    principal_vector,
    rotate_conjugation,
    sym_eigen,
)

thetas = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


# ---------------------------------------------------------------------------
# Model construction
# ---------------------------------------------------------------------------

class TestBuildTangentModel:
    def test_block_form_m3(self):
        """J maps Z_i to JZ_i and JZ_i to -Z_i; A fixes Z_i and negates JZ_i."""
        model = build_tangent_model(3)
        for i in range(1, 4):
            npt.assert_array_equal(model.J @ model.zvec(i), model.jzvec(i))
            npt.assert_array_equal(model.J @ model.jzvec(i), -model.zvec(i))
            npt.assert_array_equal(model.A @ model.zvec(i), model.zvec(i))
            npt.assert_array_equal(model.A @ model.jzvec(i), -model.jzvec(i))

    def test_integer_entries(self):
        model = build_tangent_model(5)
        for M in (model.J, model.A):
            assert set(np.unique(M)) <= {-1.0, 0.0, 1.0}

    def test_conjugation_trace_zero(self):
        assert np.trace(build_tangent_model(3).A) == 0.0

    def test_complex_structure_squares_to_minus_id(self):
        model = build_tangent_model(4)
        assert np.linalg.norm(model.J @ model.J + np.eye(8)) == 0.0

    def test_structural_identities(self):
        model = build_tangent_model(4)
        eye = np.eye(model.dim)
        npt.assert_array_equal(model.A @ model.A, eye)
        npt.assert_array_equal(model.A @ model.J + model.J @ model.A, np.zeros_like(eye))
        npt.assert_array_equal(model.A, model.A.T)

    @pytest.mark.parametrize("m", [0, -2, 65, 2.5])
    def test_invalid_dimension(self, m):
        with pytest.raises(InvalidDimensionError):
            build_tangent_model(m)


# ---------------------------------------------------------------------------
# Conjugation circle
# ---------------------------------------------------------------------------

class TestRotateConjugation:
    def test_theta_zero_is_base(self):
        model = build_tangent_model(3)
        npt.assert_array_equal(rotate_conjugation(model, 0.0), model.A)

    def test_theta_pi_is_negated_involution(self):
        model = build_tangent_model(3)
        A_pi = rotate_conjugation(model, math.pi)
        npt.assert_allclose(A_pi, -model.A, atol=1e-15)
        npt.assert_allclose(A_pi @ A_pi, np.eye(model.dim), atol=1e-15)

    def test_involution_at_pi_thirds(self):
        model = build_tangent_model(3)
        A_t = rotate_conjugation(model, math.pi / 3.0)
        assert np.max(np.abs(A_t @ A_t - np.eye(model.dim))) < 1e-14

    @given(theta=thetas)
    def test_rotated_member_properties(self, theta):
        """Every member is a symmetric involution anti-commuting with J."""
        model = build_tangent_model(3)
        A_t = rotate_conjugation(model, theta)
        eye = np.eye(model.dim)
        assert np.max(np.abs(A_t @ A_t - eye)) < 1e-13
        assert np.max(np.abs(A_t - A_t.T)) < 1e-13
        assert np.max(np.abs(A_t @ model.J + model.J @ A_t)) < 1e-13


# ---------------------------------------------------------------------------
# Canonical angle
# ---------------------------------------------------------------------------

class TestCanonicalAngle:
    def test_principal_direction(self):
        model = build_tangent_model(3)
        res = canonical_angle(model, principal_vector(model))
        assert res.t == 0.0
        assert res.kind == "A-principal"

    def test_isotropic_direction(self):
        model = build_tangent_model(3)
        res = canonical_angle(model, isotropic_vector(model))
        assert abs(res.t - math.pi / 4.0) < 1e-12
        assert res.kind == "A-isotropic"

    def test_generic_angle_recovered(self):
        model = build_tangent_model(3)
        U = math.cos(0.3) * model.zvec(1) + math.sin(0.3) * model.jzvec(2)
        res = canonical_angle(model, U)
        assert abs(res.t - 0.3) < 1e-12
        assert res.kind == "generic"

    def test_generic_angle_against_grid_maximization(self):
        """Grid oracle: maximize the conjugation pairing over the circle."""
        model = build_tangent_model(3)
        U = math.cos(0.3) * model.zvec(1) + math.sin(0.3) * model.jzvec(2)
        best = max(
            float(U @ (rotate_conjugation(model, th) @ U))
            for th in np.linspace(0.0, 2.0 * math.pi, 200001)
        )
        t_oracle = 0.5 * math.acos(min(1.0, best))
        assert abs(t_oracle - canonical_angle(model, U).t) < 1e-6

    @given(theta=thetas)
    def test_invariant_under_circle_rotation(self, theta):
        """Replacing the base conjugation by any member leaves the angle fixed."""
        base = build_tangent_model(3)
        rotated = build_tangent_model(3, conjugation=rotate_conjugation(base, theta))
        U = math.cos(0.3) * base.zvec(1) + math.sin(0.3) * base.jzvec(2)
        assert abs(canonical_angle(rotated, U).t - 0.3) < 1e-10

    def test_non_unit_rejected(self):
        model = build_tangent_model(3)
        with pytest.raises(NormalizationError):
            canonical_angle(model, 2.0 * model.zvec(1))


# ---------------------------------------------------------------------------
# Ambient curvature tensor
# ---------------------------------------------------------------------------

class TestAmbientCurvature:
    def test_vanishes_on_equal_arguments(self):
        model = build_tangent_model(3)
        rng = np.random.default_rng(3)
        X = rng.standard_normal(model.dim)
        Z = rng.standard_normal(model.dim)
        npt.assert_allclose(ambient_curvature(model, X, X, Z), 0.0, atol=1e-13)

    def test_term_by_term_example(self):
        """R(Z_1, Z_2) Z_2 = 2 Z_1: the metric and conjugation terms each give Z_1."""
        model = build_tangent_model(3)
        out = ambient_curvature(model, model.zvec(1), model.zvec(2), model.zvec(2))
        npt.assert_allclose(out, 2.0 * model.zvec(1), atol=1e-15)

    def test_skew_symmetry_in_last_two_slots(self):
        model = build_tangent_model(4)
        rng = np.random.default_rng(7)
        worst = 0.0
        for _ in range(100):
            X, Y, Z, W = (rng.standard_normal(model.dim) for _ in range(4))
            worst = max(
                worst,
                abs(
                    float(ambient_curvature(model, X, Y, Z) @ W)
                    + float(ambient_curvature(model, X, Y, W) @ Z)
                ),
            )
        assert worst < 1e-12

    def test_first_bianchi_identity(self):
        model = build_tangent_model(4)
        rng = np.random.default_rng(11)
        worst = 0.0
        for _ in range(100):
            X, Y, Z = (rng.standard_normal(model.dim) for _ in range(3))
            cyc = (
                ambient_curvature(model, X, Y, Z)
                + ambient_curvature(model, Y, Z, X)
                + ambient_curvature(model, Z, X, Y)
            )
            worst = max(worst, float(np.max(np.abs(cyc))))
        assert worst < 1e-12


# ---------------------------------------------------------------------------
# Ambient Jacobi operator
# ---------------------------------------------------------------------------

class TestAmbientJacobi:
    @pytest.mark.parametrize("m", [3, 4, 6])
    def test_principal_spectrum(self, m):
        model = build_tangent_model(m)
        rep = sym_eigen(ambient_jacobi(model, principal_vector(model)))
        assert rep.multiplicities == (m, m)
        npt.assert_allclose(rep.distinct, (0.0, 2.0), atol=1e-12)

    @pytest.mark.parametrize("m", [3, 4, 6])
    def test_isotropic_spectrum(self, m):
        model = build_tangent_model(m)
        rep = sym_eigen(ambient_jacobi(model, isotropic_vector(model)))
        assert rep.multiplicities == (3, 2 * m - 4, 1)
        npt.assert_allclose(rep.distinct, (0.0, 1.0, 4.0), atol=1e-12)

    def test_annihilates_its_direction(self):
        model = build_tangent_model(5)
        rng = np.random.default_rng(2)
        U = rng.standard_normal(model.dim)
        U /= np.linalg.norm(U)
        npt.assert_allclose(ambient_jacobi(model, U) @ U, 0.0, atol=1e-13)

    def test_self_adjoint(self):
        model = build_tangent_model(4)
        rng = np.random.default_rng(5)
        for _ in range(20):
            U = rng.standard_normal(model.dim)
            U /= np.linalg.norm(U)
            R_U = ambient_jacobi(model, U)
            assert np.max(np.abs(R_U - R_U.T)) < 1e-12

    @pytest.mark.parametrize("m", [3, 5])
    def test_trace_is_twice_m(self, m):
        """0*m + 2*m for principal; 0*3 + 1*(2m-4) + 4*1 for isotropic."""
        model = build_tangent_model(m)
        for U in (principal_vector(model), isotropic_vector(model)):
            assert abs(np.trace(ambient_jacobi(model, U)) - 2.0 * m) < 1e-12

    def test_non_unit_rejected(self):
        model = build_tangent_model(3)
        with pytest.raises(NormalizationError):
            ambient_jacobi(model, 0.5 * principal_vector(model))
