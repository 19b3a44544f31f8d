"""Unit tests for diagonalization and transition labelling."""

import numpy as np
import pytest

from src.core.exceptions import ContractViolationError, ValidationError
from src.schemas.circuit import TransitionLabel
from src.services.circuit.hamiltonian import harmonic_frequencies, molecule_basis
from src.services.spectrum.diagonalization import (
    diagonalize,
    eigensystem,
    solve,
    swap_parity,
)


@pytest.mark.unit
class TestEigensystem:
    """Input checks and eigenpair quality."""

    def test_identity_gives_flat_spectrum(self):
        """Test identity gives flat spectrum."""
        spectrum = diagonalize(np.eye(6), k=4)
        np.testing.assert_array_equal(spectrum.levels, np.zeros(4))
        assert spectrum.ground_energy == pytest.approx(1.0)

    def test_rejects_non_hermitian(self):
        """Test rejects non hermitian."""
        h = np.array([[0.0, 1.0], [0.0, 1.0]])
        with pytest.raises(ContractViolationError):
            eigensystem(h, 1)

    def test_rejects_non_square(self):
        """Test rejects non square."""
        with pytest.raises(ContractViolationError):
            eigensystem(np.zeros((2, 3)), 1)

    @pytest.mark.parametrize("k", [0, 4])
    def test_rejects_bad_count(self, k):
        """Test rejects bad count."""
        with pytest.raises(ValidationError):
            eigensystem(np.eye(3), k)

    def test_tiny_asymmetry_tolerated(self):
        """Test tiny asymmetry tolerated."""
        h = np.diag([2.0, 1.0, 0.0])
        h[0, 1] = 1e-12
        system = eigensystem(h, 3)
        np.testing.assert_allclose(system.energies, [0.0, 1.0, 2.0], atol=1e-9)

    def test_negligible_imaginary_part_dropped(self):
        """Test negligible imaginary part dropped."""
        h = np.diag([1.0, 3.0]).astype(complex) + 1e-14j * np.eye(2)
        system = eigensystem(h, 2)
        assert not np.iscomplexobj(system.vectors)

    def test_complex_hermitian_matrix(self):
        """Test complex hermitian matrix."""
        h = np.array([[1.0, 1j], [-1j, 1.0]])
        system = eigensystem(h, 2)
        np.testing.assert_allclose(system.energies, [0.0, 2.0], atol=1e-12)

    def test_energies_ascending_and_orthonormal(self):
        """Test energies ascending and orthonormal."""
        rng = np.random.default_rng(7)
        a = rng.normal(size=(20, 20))
        system = eigensystem(a + a.T, 5)
        assert np.all(np.diff(system.energies) >= 0)
        np.testing.assert_allclose(system.vectors.T @ system.vectors, np.eye(5), atol=1e-10)


@pytest.mark.unit
class TestSpectrum:
    """Ground-referenced levels and labels."""

    def test_transition_labels(self):
        """Test transition labels."""
        spectrum = diagonalize(np.diag([5.0, 1.0, 2.5, 4.0, 3.0, 7.0]), k=6)
        assert spectrum.transition(TransitionLabel.GE) == pytest.approx(1.5)
        assert spectrum.transition("gf") == pytest.approx(2.0)
        assert spectrum.transition("gh") == pytest.approx(3.0)
        assert spectrum.transition("gd") == pytest.approx(4.0)
        assert spectrum.transition("ef") == pytest.approx(0.5)
        assert spectrum.f_ge == pytest.approx(1.5)

    def test_missing_level_raises(self):
        """Test missing level raises."""
        spectrum = diagonalize(np.diag([0.0, 1.0, 2.0]), k=2)
        with pytest.raises(ValidationError):
            spectrum.transition("gf")

    def test_unknown_label_raises(self):
        """Test unknown label raises."""
        spectrum = diagonalize(np.diag([0.0, 1.0]), k=2)
        with pytest.raises(ValueError):
            spectrum.transition("xy")

    def test_default_count_capped_at_dimension(self):
        """Test default count capped at dimension."""
        spectrum = diagonalize(np.diag([0.0, 1.0, 2.0]))
        assert len(spectrum.levels) == 3


@pytest.mark.unit
class TestSolve:
    """Molecule diagonalization at one flux point."""

    def test_harmonic_levels(self, harmonic):
        """Test harmonic levels."""
        spectrum = solve(harmonic, 0.2, molecule_basis(harmonic, 20), k=4)
        common, differential = harmonic_frequencies(harmonic)
        np.testing.assert_allclose(
            spectrum.levels, [0.0, differential, common, 2 * differential], rtol=1e-6, atol=1e-9
        )
        np.testing.assert_allclose(spectrum.levels, [0.0, 3.299, 5.713, 6.598], atol=2e-3)

    def test_harmonic_parities(self, harmonic):
        """Test harmonic parities."""
        spectrum = solve(harmonic, 0.0, molecule_basis(harmonic, 20), k=4)
        np.testing.assert_allclose(spectrum.parities, [1.0, -1.0, 1.0, 1.0], atol=1e-6)

    def test_half_flux_tunnel_pair(self, symmetric_a):
        """Test half flux tunnel pair."""
        spectrum = solve(symmetric_a, 0.5, molecule_basis(symmetric_a, 20), k=2)
        np.testing.assert_allclose(spectrum.parities, [1.0, -1.0], atol=1e-6)
        assert 0.0 < spectrum.f_ge < 1.0

    def test_swap_parity_of_product_states(self):
        """Test swap parity of product states."""
        dim = 3
        symmetric = np.zeros(dim * dim)
        symmetric[0 * dim + 1] = symmetric[1 * dim + 0] = 2**-0.5
        antisymmetric = np.zeros(dim * dim)
        antisymmetric[0 * dim + 1] = 2**-0.5
        antisymmetric[1 * dim + 0] = -(2**-0.5)
        parities = swap_parity(np.column_stack([symmetric, antisymmetric]), dim)
        np.testing.assert_allclose(parities, [1.0, -1.0])

    def test_levels_referenced_to_ground(self, device_a):
        """Test levels referenced to ground."""
        spectrum = solve(device_a, 0.3, molecule_basis(device_a, 12), k=3)
        assert spectrum.levels[0] == 0.0
