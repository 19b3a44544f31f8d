"""Unit tests for the dephasing budget and asymmetry scans."""

import math

import numpy as np
import pytest

from src.schemas.noise import AntennaConfig, FormulaMode
from src.services.circuit.hamiltonian import molecule_basis
from src.services.noise.budget import asymmetry_scan, dephasing_budget
from src.services.noise.flux_noise import coherence_time


@pytest.fixture
def basis(device_a):
    return molecule_basis(device_a, 12)


@pytest.mark.unit
class TestDephasingBudget:
    """All mechanisms at one flux point."""

    def test_rates_combine(self, device_a, noise_a, basis):
        """Test rates combine."""
        budget = dephasing_budget(device_a, 0.45, noise_a, basis)
        assert budget.gamma_flux == budget.gamma_common + budget.gamma_diff
        assert budget.gamma_total == budget.gamma_flux
        assert budget.gamma_photon is None
        assert budget.t2_ramsey == pytest.approx(coherence_time(budget.gamma_flux))
        for _, rate in budget.rows():
            assert rate >= 0 and math.isfinite(rate)

    def test_rows_in_report_order(self, device_a, noise_a, basis):
        """Test rows in report order."""
        names = [name for name, _ in dephasing_budget(device_a, 0.45, noise_a, basis).rows()]
        assert names == [
            "gamma_common",
            "gamma_diff",
            "gamma_flux",
            "gamma_ic_junction",
            "gamma_ic_array",
            "gamma_total",
        ]

    def test_photon_rate_needs_full_antenna(self, device_a, noise_a, basis):
        """Test photon rate needs full antenna."""
        partial = AntennaConfig(f_a=7.875, kappa_over_2pi=6.0)
        assert dephasing_budget(device_a, 0.45, noise_a, basis, partial).gamma_photon is None

        full = AntennaConfig(f_a=7.875, kappa_over_2pi=6.0, chi_over_2pi=1.0, n_bar=0.5)
        budget = dephasing_budget(device_a, 0.45, noise_a, basis, full)
        assert budget.gamma_photon == pytest.approx(5.09e5, rel=1e-3)
        assert budget.gamma_total == pytest.approx(budget.gamma_flux + budget.gamma_photon)
        assert [name for name, _ in budget.rows()][-2:] == ["gamma_photon", "gamma_total"]

    def test_differential_rate_zero_at_zero_flux(self, device_a, noise_a, basis):
        """Test differential rate zero at zero flux."""
        budget = dephasing_budget(device_a, 0.0, noise_a, basis)
        assert budget.gamma_diff == 0.0
        assert budget.alpha_slope == pytest.approx(0.0, abs=1e-9)

    def test_mode_is_recorded(self, device_a, noise_a, basis):
        """Test mode is recorded."""
        budget = dephasing_budget(device_a, 0.45, noise_a, basis, mode="literal")
        assert budget.mode is FormulaMode.LITERAL

    def test_echo_time_longer_than_ramsey(self, device_a, noise_a, basis):
        """Test echo time longer than ramsey."""
        budget = dephasing_budget(device_a, 0.3, noise_a, basis)
        assert budget.t2_echo is not None
        assert budget.t2_echo > budget.t2_ramsey


@pytest.mark.unit
class TestAsymmetryScan:
    """Differential-mode rate against flux and alpha."""

    def test_shape_and_zero_flux(self, device_a, noise_a, basis):
        """Test shape and zero flux."""
        scan = asymmetry_scan(device_a, [0.0, 0.3, 0.45], [0.0, 0.006], noise_a, basis)
        assert scan.gamma_diff.shape == (2, 3)
        assert np.isnan(scan.gamma_diff[:, 0]).all()
        assert np.all(scan.gamma_diff[:, 1:] >= 0)

    def test_asymmetry_raises_differential_rate(self, device_a, noise_a, basis):
        """Test asymmetry raises differential rate."""
        scan = asymmetry_scan(device_a, [0.3], [0.0, 0.006, 0.03], noise_a, basis)
        rates = scan.gamma_diff[:, 0]
        assert rates[0] < rates[1] < rates[2]
