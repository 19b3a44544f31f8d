"""Unit tests for critical-current dephasing."""

import math

import pytest

from src.core.exceptions import ValidationError
from src.schemas.noise import CriticalCurrentTarget, FormulaMode
from src.services.circuit.hamiltonian import molecule_basis
from src.services.noise import critical_current
from src.services.noise.critical_current import critical_current_dephasing, effective_amplitude
from src.services.noise.flux_noise import solve_ramsey_rate


@pytest.mark.unit
class TestEffectiveAmplitude:
    """Averaging over array junctions."""

    def test_small_junction_unchanged(self):
        """Test small junction unchanged."""
        assert effective_amplitude("small-junction", 1e-3) == 1e-3

    def test_array_suppressed_by_root_n(self):
        """Test array suppressed by root n."""
        ratio = effective_amplitude(CriticalCurrentTarget.ARRAY, 1e-3, 40) / 1e-3
        assert ratio == pytest.approx(1 / math.sqrt(40))
        assert ratio == pytest.approx(0.158, abs=1e-3)

    def test_rejects_negative_amplitude(self):
        """Test rejects negative amplitude."""
        with pytest.raises(ValidationError):
            effective_amplitude("array", -1e-3)

    def test_rejects_empty_array(self):
        """Test rejects empty array."""
        with pytest.raises(ValidationError):
            effective_amplitude("array", 1e-3, 0)


@pytest.mark.unit
class TestCriticalCurrentDephasing:
    """Rate from the E_J or E_L sensitivity."""

    def test_zero_amplitude_gives_zero_rate(self, device_a):
        """Test zero amplitude gives zero rate."""
        result = critical_current_dephasing(device_a, 0.4, rel_amp=0.0)
        assert result.gamma == 0.0

    @pytest.mark.parametrize(
        "target, energy, amplitude",
        [
            ("small-junction", "e_j", 1e-3),
            ("array", "e_l", 1e-3 / math.sqrt(40)),
        ],
    )
    def test_target_selects_energy(self, device_a, mocker, target, energy, amplitude):
        """Test target selects energy."""
        spy = mocker.patch.object(critical_current, "energy_sensitivity", return_value=0.5)
        result = critical_current_dephasing(device_a, 0.4, target=target)
        assert spy.call_args.args[2] == energy
        assert result == solve_ramsey_rate(amplitude, 0.5, None, FormulaMode.CONVENTIONAL)

    def test_molecule_rate_is_positive(self, device_a):
        """Test molecule rate is positive."""
        result = critical_current_dephasing(device_a, 0.4, molecule_basis(device_a, 12))
        assert result.gamma > 0
        assert result.mode is FormulaMode.CONVENTIONAL
