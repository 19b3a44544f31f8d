"""Unit tests for closed-form noise estimates."""

import math

import numpy as np
import pytest

from src.core.exceptions import ValidationError
from src.schemas.circuit import MoleculeParams
from src.services.noise.estimates import (
    effective_temperature,
    phase_slip_estimate,
    photon_noise_rate,
    thermal_photon_number,
    thermal_population,
)

KAPPA = 2 * math.pi * 6e6


@pytest.mark.unit
class TestPhotonNoise:
    """n kappa chi^2 / (kappa^2 + chi^2)."""

    def test_reference_value(self):
        """Test the photon-noise rate at half a photon."""
        assert photon_noise_rate(0.5, KAPPA, 2 * math.pi * 1e6) == pytest.approx(5.09e5, rel=1e-3)

    @pytest.mark.parametrize("n_bar, chi", [(0.0, 1e6), (0.5, 0.0)])
    def test_vanishes_without_photons_or_shift(self, n_bar, chi):
        """Test vanishes without photons or shift."""
        assert photon_noise_rate(n_bar, KAPPA, chi) == 0.0

    def test_monotone_and_bounded_up_to_linewidth(self):
        """Test monotone and bounded up to linewidth."""
        rates = [photon_noise_rate(0.5, KAPPA, chi) for chi in np.linspace(0, KAPPA, 50)]
        assert np.all(np.diff(rates) > 0)
        assert rates[-1] == pytest.approx(0.5 * KAPPA / 2)

    @pytest.mark.parametrize("n_bar, kappa", [(0.5, 0.0), (-0.1, KAPPA)])
    def test_invalid(self, n_bar, kappa):
        """Test invalid photon number or linewidth is rejected."""
        with pytest.raises(ValidationError):
            photon_noise_rate(n_bar, kappa, 1e6)


@pytest.mark.unit
class TestPhaseSlip:
    """Order-of-magnitude phase-slip scales."""

    def test_device_a(self, device_a):
        """Test phase-slip scales of device A."""
        estimate = phase_slip_estimate(device_a)
        assert estimate.e_s == pytest.approx(0.066, abs=1e-3)
        assert estimate.delta == pytest.approx(7.896, abs=1e-3)
        assert estimate.splitting == estimate.e_s**2 / estimate.delta

    def test_suppressed_with_stiffer_junctions(self):
        """Test suppressed with stiffer junctions."""
        values = [
            phase_slip_estimate(MoleculeParams(e_j=e_j, e_c=3.4, e_l=1.2)).e_s
            for e_j in (5.0, 10.0, 20.0, 40.0)
        ]
        assert values == sorted(values, reverse=True)


@pytest.mark.unit
class TestThermal:
    """Equilibrium occupations."""

    def test_sweet_spot_population(self):
        """Test sweet spot population."""
        assert thermal_population(0.105, 0.016) == pytest.approx(0.422, abs=1e-3)

    def test_limits(self):
        """Test thermal population at zero splitting and zero temperature."""
        assert thermal_population(0.0, 0.016) == 0.5
        assert thermal_population(5.0, 1e-4) == pytest.approx(0.0, abs=1e-12)

    def test_rejects_non_positive_temperature(self):
        """Test rejects non positive temperature."""
        with pytest.raises(ValidationError):
            thermal_population(1.0, 0.0)

    def test_effective_temperature_inverts_photon_number(self):
        """Test effective temperature inverts photon number."""
        temperature = effective_temperature(7.875, 0.5)
        assert thermal_photon_number(7.875, temperature) == pytest.approx(0.5, rel=1e-12)
        assert effective_temperature(7.875, 0.0) == 0.0
