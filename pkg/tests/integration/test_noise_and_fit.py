"""End-to-end dephasing and spectrum-fit workflows."""

import math

import numpy as np
import pytest

from src.schemas.fitting import FitConfig, FitParameters
from src.services.circuit.hamiltonian import molecule_basis
from src.services.fitting.fitter import fit, synthesize_observations
from src.services.noise.budget import dephasing_budget
from src.services.noise.estimates import photon_noise_rate, thermal_population
from src.services.noise.flux_noise import echo_ramsey_ratio
from src.services.spectrum.sensitivity import sweet_spot


@pytest.mark.integration
class TestNoiseShape:
    """Which flux-noise channel dominates where."""

    def test_differential_dominates_at_minimum(self, device_a, noise_a):
        """Test differential dominates at minimum."""
        basis = molecule_basis(device_a, 30)
        spot = sweet_spot(device_a, basis=basis)
        budget = dephasing_budget(device_a, spot, noise_a, basis)
        assert budget.gamma_diff > budget.gamma_common

    def test_common_dominates_at_low_flux(self, device_a, noise_a):
        """Test common dominates at low flux."""
        budget = dephasing_budget(device_a, 0.15, noise_a, molecule_basis(device_a, 30))
        assert budget.gamma_common > budget.gamma_diff

    def test_echo_ratio_near_four(self):
        """Test echo ratio near four."""
        assert 3.5 <= echo_ramsey_ratio(2.2e6, 1.0) <= 4.5


@pytest.mark.integration
class TestClosedForms:
    """Hand-computed reference values."""

    @pytest.mark.parametrize(
        "n_bar, kappa, chi",
        [
            (0.5, 2 * math.pi * 6e6, 2 * math.pi * 1e6),
            (0.1, 1e7, 1e7),
            (2.0, 3.3e6, 4.4e5),
            (0.01, 1e8, 5e6),
            (1.0, 1.0, 1e3),
        ],
    )
    def test_photon_noise(self, n_bar, kappa, chi):
        """Test photon-noise dephasing against measured values."""
        expected = n_bar * kappa * chi**2 / (kappa**2 + chi**2)
        assert photon_noise_rate(n_bar, kappa, chi) == pytest.approx(expected, rel=1e-12)

    def test_thermal_population_at_base_temperature(self):
        """Test thermal population at base temperature."""
        assert 0.40 <= thermal_population(0.105, 0.016) <= 0.46


def _fit_config(truth, perturbation: float) -> FitConfig:
    return FitConfig(
        ejec_product=truth.ejec_product,
        initial=FitParameters(
            alpha=truth.alpha * (1 + perturbation),
            ratio=truth.ratio * (1 + perturbation),
            e_l=truth.e_l * (1 - perturbation),
        ),
        basis_dim=20,
        polish_dim=20,
        max_evals=600,
    )


@pytest.mark.integration
@pytest.mark.performance
class TestFitRoundTrip:
    """Recover device A from synthetic spectroscopy."""

    FLUXES = np.linspace(0.0, 1.5, 10)

    def _assert_recovered(self, result, truth, rel):
        assert result.params.alpha == pytest.approx(truth.alpha, rel=rel)
        assert result.ratio == pytest.approx(truth.ratio, rel=rel)
        assert result.params.e_l == pytest.approx(truth.e_l, rel=rel)

    def test_noiseless(self, device_a):
        """Test noiseless synthetic data is fitted back within 1%."""
        data = synthesize_observations(device_a, self.FLUXES, basis_dim=20)
        assert len(data) == 30
        result = fit(_fit_config(device_a, 0.1), data)
        self._assert_recovered(result, device_a, 0.01)

    def test_noisy(self, device_a):
        """Test noisy synthetic data is fitted back within 5%."""
        data = synthesize_observations(
            device_a, self.FLUXES, basis_dim=20, noise_ghz=0.005, seed=2024
        )
        result = fit(_fit_config(device_a, 0.1), data)
        self._assert_recovered(result, device_a, 0.05)
        assert result.residual < 0.02

    def test_default_two_stage_fit(self, device_a):
        """Test the default coarse fit plus polish recovers device A within 1%."""
        data = synthesize_observations(device_a, np.linspace(0.0, 1.5, 6), basis_dim=30)
        start = _fit_config(device_a, 0.05)
        config = FitConfig(ejec_product=start.ejec_product, initial=start.initial)
        assert (config.basis_dim, config.polish_dim) == (20, 30)
        result = fit(config, data)
        self._assert_recovered(result, device_a, 0.01)
        assert result.evaluations <= config.max_evals
