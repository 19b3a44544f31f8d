"""End-to-end checks of the molecule spectrum against reference device data."""

import numpy as np
import pytest

from src.schemas.circuit import MoleculeParams
from src.services.circuit.hamiltonian import (
    build_hamiltonian,
    build_hamiltonian_gauge2,
    harmonic_frequencies,
    molecule_basis,
)
from src.services.circuit.potential import critical_flux
from src.services.spectrum.diagonalization import diagonalize, solve
from src.services.spectrum.sensitivity import sweet_spot, transition_frequency
from src.services.spectrum.sweep import flux_sweep


@pytest.mark.integration
class TestDeviceSpectra:
    """Measured transition frequencies of the three devices."""

    @pytest.mark.parametrize("name, expected", [("A", 0.105), ("B", 0.110)])
    def test_half_flux_transition(self, devices, name, expected):
        """Test half flux transition."""
        assert transition_frequency(devices[name], 0.5) == pytest.approx(expected, rel=0.2)

    def test_device_c_minimum_is_shifted(self, device_c):
        """Test device c minimum is shifted."""
        spot = sweet_spot(device_c)
        assert spot == pytest.approx(0.43, abs=0.02)
        assert transition_frequency(device_c, spot) == pytest.approx(0.197, rel=0.2)

    def test_zero_flux_transition(self, device_a):
        """Test zero flux transition."""
        assert transition_frequency(device_a, 0.0) == pytest.approx(11.2, rel=0.1)

    def test_asymmetry_gap_ordering(self, device_a, device_c):
        """Test asymmetry gap ordering."""
        def gap(params: MoleculeParams) -> float:
            return transition_frequency(params, 1.5) - transition_frequency(params, 0.5)

        gap_a, gap_c = gap(device_a), gap(device_c)
        assert gap_a > 0 and gap_c > 0
        assert gap_c >= 3 * gap_a
        assert gap_a == pytest.approx(0.040, rel=0.5)
        assert gap_c == pytest.approx(0.354, rel=0.3)


@pytest.mark.integration
class TestClassicalCriticalPoint:
    """Single to double well transition of the symmetric molecule."""

    def test_critical_flux(self, symmetric_a):
        """Test the single to double well crossover flux."""
        assert critical_flux(symmetric_a) == pytest.approx(0.30, abs=0.05)


@pytest.mark.integration
class TestGaugeInvariance:
    """Loop gauge and common/differential gauge give the same spectrum."""

    @staticmethod
    def both_gauges(params, phi_ext, dim):
        basis = molecule_basis(params, dim)
        first = diagonalize(build_hamiltonian(params, phi_ext, basis), k=8)
        second = diagonalize(build_hamiltonian_gauge2(params, phi_ext, basis), k=8)
        return first, second

    @pytest.mark.parametrize("phi_ext", [0.0, 0.25, 0.5])
    def test_lowest_levels_close_at_default_basis(self, devices, phi_ext):
        """Test both gauges agree to the dim-30 truncation error."""
        for params in devices.values():
            first, second = self.both_gauges(params, phi_ext, 30)
            np.testing.assert_allclose(second.levels, first.levels, rtol=0, atol=1e-4)

    @pytest.mark.performance
    @pytest.mark.parametrize("phi_ext", [0.0, 0.25, 0.5])
    def test_lowest_levels_agree_at_converged_basis(self, devices, phi_ext):
        """Test the lowest 8 levels agree within 1e-5 GHz once the basis converges."""
        for params in devices.values():
            first, second = self.both_gauges(params, phi_ext, 40)
            np.testing.assert_allclose(second.levels, first.levels, rtol=0, atol=1e-5)

    @pytest.mark.performance
    def test_device_a_qubit_frequency(self, device_a):
        """Test f_ge at half flux matches across gauges within 1e-4 relative."""
        first, second = self.both_gauges(device_a, 0.5, 40)
        assert second.f_ge == pytest.approx(first.f_ge, rel=1e-4)


@pytest.mark.integration
class TestHarmonicOracle:
    """Junction-free molecule reduces to two normal modes."""

    def test_normal_mode_ladder(self, harmonic):
        """Test normal mode ladder."""
        common, differential = harmonic_frequencies(harmonic)
        assert common == pytest.approx(np.sqrt(8 * 3.4 * 1.2), rel=1e-12)
        assert differential == pytest.approx(np.sqrt(8 * 3.4 * 1.2 / 3), rel=1e-12)
        spectrum = solve(harmonic, 0.37, molecule_basis(harmonic, 30), k=5)
        expected = [0.0, differential, common, 2 * differential, common + differential]
        np.testing.assert_allclose(spectrum.levels, expected, rtol=1e-6, atol=1e-9)


@pytest.mark.integration
class TestSymmetries:
    """Flux reflection, periodicity and swap parity of the symmetric molecule."""

    def test_even_about_half_flux_and_periodic(self, symmetric_a):
        """Test even about half flux and periodic."""
        basis = molecule_basis(symmetric_a, 30)
        offsets = np.array([0.05, 0.13, 0.31])
        grid = np.concatenate([0.5 - offsets, 0.5 + offsets, 1.5 - offsets])
        curve = flux_sweep(symmetric_a, grid, basis, k=2).curve("ge")
        below, above, shifted = np.split(curve, 3)
        np.testing.assert_allclose(above, below, rtol=0, atol=1e-6)
        np.testing.assert_allclose(shifted, below, rtol=0, atol=1e-6)

    def test_parities_stay_labelled(self, symmetric_a):
        """Test parities stay labelled."""
        basis = molecule_basis(symmetric_a, 20)
        result = flux_sweep(symmetric_a, np.linspace(0.0, 1.0, 9), basis, k=3)
        for spectrum in result.spectra:
            np.testing.assert_allclose(np.abs(spectrum.parities), 1.0, atol=1e-6)
            assert spectrum.parities[0] == pytest.approx(1.0, abs=1e-6)


@pytest.mark.integration
@pytest.mark.performance
class TestTruncationConvergence:
    """Lowest levels settle between dim 30 and dim 40."""

    def test_all_devices(self, devices):
        """Test levels of every device agree between dim 30 and dim 40."""
        fluxes = np.linspace(0.0, 1.5, 16)
        for params in devices.values():
            coarse = flux_sweep(params, fluxes, molecule_basis(params, 30), k=5)
            fine = flux_sweep(params, fluxes, molecule_basis(params, 40), k=5)
            for low, high in zip(coarse.spectra, fine.spectra):
                np.testing.assert_allclose(low.levels[1:], high.levels[1:], rtol=1e-4)
