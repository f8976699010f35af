import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpcqkd.errors import DomainError, NonPhysicalCovariance
from zpcqkd.gaussian import (
    SymplecticSpectrum,
    TwoModeCovariance,
    conditional_eigenvalue,
    holevo_bound,
    mutual_information,
    symplectic_eigenvalues,
    symplectic_spectrum,
    von_neumann_G,
)

import oracles

G_HALF = 1.3774437510817342  # (1.5 log2 1.5 - 0.5 log2 0.5), 50-digit evaluation


def pure_epr(v: float) -> TwoModeCovariance:
    return TwoModeCovariance(v, v, math.sqrt(v * v - 1.0))


def physical_triples(v_max=61.0):
    """Strategy over (X, Y, Z) accepted as physical."""
    return st.tuples(
        st.floats(1.0, v_max), st.floats(1.0, v_max), st.floats(-1.0, 1.0)
    ).map(lambda xyf: (
        xyf[0], xyf[1],
        xyf[2] * math.sqrt(max(xyf[0] * xyf[1] - 1.0 - abs(xyf[0] - xyf[1]), 0.0)),
    ))


class TestTwoModeCovariance:
    def test_rejects_sub_shot_noise_variances(self):
        with pytest.raises(NonPhysicalCovariance):
            TwoModeCovariance(0.5, 2.0, 0.0)
        with pytest.raises(NonPhysicalCovariance):
            TwoModeCovariance(2.0, 0.999, 0.0)

    def test_rejects_cauchy_schwarz_violation(self):
        with pytest.raises(NonPhysicalCovariance):
            TwoModeCovariance(2.0, 2.0, 2.1)

    def test_accepts_pure_epr(self):
        cm = pure_epr(40.0)
        assert cm.x_ab == math.sqrt(1599.0)


class TestSymplecticEigenvalues:
    def test_decoupled_modes(self):
        assert symplectic_eigenvalues(TwoModeCovariance(3.0, 2.0, 0.0)) == (3.0, 2.0)

    @pytest.mark.parametrize("v", [1.1, 2.0, 10.0, 40.0, 100.0])
    def test_pure_epr_saturates_at_unity(self, v):
        l1, l2 = symplectic_eigenvalues(pure_epr(v))
        assert l1 == pytest.approx(1.0, abs=1e-9)
        assert l2 == pytest.approx(1.0, abs=1e-9)

    def test_symmetric_thermal_correlated(self):
        # X = Y = 5, Z^2 = 0.8 * 24: degenerate pair, frozen from the dense oracle
        cm = TwoModeCovariance(5.0, 5.0, math.sqrt(0.8 * 24.0))
        l1, l2 = symplectic_eigenvalues(cm)
        assert l1 == pytest.approx(2.4083189157584592, rel=1e-12)
        assert l2 == pytest.approx(2.4083189157584592, rel=1e-12)

    def test_unphysical_correlations_rejected(self):
        # Cauchy-Schwarz-allowed but stronger than quantum mechanics permits
        with pytest.raises(NonPhysicalCovariance):
            symplectic_eigenvalues(TwoModeCovariance(1.5, 1.5, 1.4))

    @settings(max_examples=200)
    @given(physical_triples())
    def test_matches_dense_oracle(self, triple):
        x, y, z = triple
        l1, l2 = symplectic_eigenvalues(TwoModeCovariance(x, y, z))
        o1, o2 = oracles.dense_symplectic_eigenvalues(x, y, z)
        assert l1 >= l2 >= 1.0 - 1e-9
        assert l1 == pytest.approx(o1, rel=1e-10)
        assert l2 == pytest.approx(o2, rel=1e-10)


class TestConditionalEigenvalue:
    def test_uncorrelated(self):
        assert conditional_eigenvalue(TwoModeCovariance(3.0, 2.0, 0.0)) == 3.0

    @pytest.mark.parametrize("v", [1.1, 2.0, 10.0, 40.0, 100.0])
    def test_pure_epr_conditions_to_vacuum(self, v):
        assert conditional_eigenvalue(pure_epr(v)) == pytest.approx(1.0, abs=1e-9)

    @settings(max_examples=100)
    @given(physical_triples())
    def test_matches_schur_complement(self, triple):
        x, y, z = triple
        lam3 = conditional_eigenvalue(TwoModeCovariance(x, y, z))
        assert lam3 == pytest.approx(oracles.dense_conditional_eigenvalue(x, y, z), rel=1e-10)

    def test_spectrum_ordering_enforced(self):
        with pytest.raises(NonPhysicalCovariance):
            SymplecticSpectrum(1.0, 2.0, 1.0)


class TestVonNeumannG:
    def test_zero_limit(self):
        assert von_neumann_G(0.0) == 0.0

    def test_one(self):
        assert von_neumann_G(1.0) == pytest.approx(2.0, rel=1e-15)

    def test_half(self):
        assert von_neumann_G(0.5) == pytest.approx(G_HALF, rel=1e-14)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            von_neumann_G(-1e-12)

    def test_monotone_on_geometric_grid(self):
        grid = np.geomspace(1e-6, 1e3, 400)
        values = [von_neumann_G(float(v)) for v in grid]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert values[0] > 0.0


class TestMutualInformation:
    @pytest.mark.parametrize("x,y", [(1.0, 1.0), (3.0, 2.0), (40.0, 7.5)])
    def test_zero_iff_uncorrelated(self, x, y):
        assert mutual_information(TwoModeCovariance(x, y, 0.0)) == 0.0

    def test_pure_epr_40(self):
        assert mutual_information(pure_epr(40.0)) == pytest.approx(4.357552004618084, rel=1e-12)

    def test_moderate_correlation(self):
        cm = TwoModeCovariance(3.0, 3.0, 2.0)
        assert mutual_information(cm) == pytest.approx(0.4150374992788438, rel=1e-12)

    @settings(max_examples=100)
    @given(physical_triples())
    def test_matches_conditional_variance_route(self, triple):
        x, y, z = triple
        lib = mutual_information(TwoModeCovariance(x, y, z))
        assert lib >= 0.0
        if abs(z) > 1e-12:
            ora = oracles.conditional_variance_mutual_information(x, y, z)
            assert lib == pytest.approx(ora, rel=1e-9, abs=1e-12)

    @settings(max_examples=100)
    @given(physical_triples())
    def test_sign_of_correlation_irrelevant(self, triple):
        x, y, z = triple
        assert mutual_information(TwoModeCovariance(x, y, z)) == \
            mutual_information(TwoModeCovariance(x, y, -z))


class TestHolevoBound:
    @pytest.mark.parametrize("v", [1.1, 2.0, 10.0, 40.0, 100.0])
    def test_pure_epr_leaks_nothing(self, v):
        assert abs(holevo_bound(pure_epr(v))) <= 1e-9

    def test_decoupled_case_reduces_to_single_mode_entropy(self):
        # lam1 = lam3 = 3 cancel, leaving G((2-1)/2) = G(0.5)
        assert holevo_bound(TwoModeCovariance(3.0, 2.0, 0.0)) == pytest.approx(G_HALF, rel=1e-12)

    def test_catalyzed_channel_output_matches_dense_oracle(self):
        # V_A = 40 source, t = 0.7 catalysis, 20 km link, ideal detection
        from zpcqkd.channel import ProtocolParams
        from zpcqkd.keyrate import output_covariance

        cm = output_covariance(ProtocolParams(l_ac=20.0, t=0.7))
        lib = holevo_bound(cm)
        assert lib == pytest.approx(oracles.dense_holevo(cm.x_aa, cm.x_bb, cm.x_ab), rel=1e-10)
        assert lib == pytest.approx(0.5689501538020996, rel=1e-10)

    @settings(max_examples=100)
    @given(physical_triples())
    def test_nonnegative_and_matches_dense_route(self, triple):
        x, y, z = triple
        lib = holevo_bound(TwoModeCovariance(x, y, z))
        assert lib >= -1e-12
        assert lib == pytest.approx(oracles.dense_holevo(x, y, z), rel=1e-9, abs=1e-10)

    def test_spectrum_fields_consistent(self):
        cm = TwoModeCovariance(5.0, 3.0, 2.5)
        spec = symplectic_spectrum(cm)
        assert (spec.lambda1, spec.lambda2) == symplectic_eigenvalues(cm)
        assert spec.lambda3 == conditional_eigenvalue(cm)
