"""Closed-form estimates: photon-shot dephasing, phase slips and thermal occupation."""

import math
from dataclasses import dataclass

from scipy.constants import h, k
from scipy.special import expit

from src.core.exceptions import ValidationError
from src.schemas.circuit import MoleculeParams

GHZ = 1e9


def photon_noise_rate(n_bar: float, kappa: float, chi: float) -> float:
    """
    Dephasing from thermal photons in the readout antenna.

    Gamma = n_bar kappa chi^2 / (kappa^2 + chi^2)

    Args:
        n_bar: Mean photon number
        kappa: Antenna linewidth in rad/s
        chi: Dispersive shift in rad/s

    Returns:
        Rate in 1/s

    Raises:
        ValidationError: If kappa <= 0 or n_bar < 0
    """
    if kappa <= 0:
        raise ValidationError(f"kappa must be positive, got {kappa}")
    if n_bar < 0:
        raise ValidationError(f"n_bar must be non-negative, got {n_bar}")
    return n_bar * kappa * chi**2 / (kappa**2 + chi**2)


@dataclass(frozen=True)
class PhaseSlipEstimate:
    """Order-of-magnitude phase-slip energies in GHz."""

    e_s: float
    delta: float
    splitting: float


def phase_slip_estimate(params: MoleculeParams) -> PhaseSlipEstimate:
    """
    Single phase-slip energy, the flux-state spacing it couples, and the
    resulting second-order splitting E_S^2 / Delta.
    """
    e_s = (params.e_j**3 * params.e_c) ** 0.25 * math.exp(
        -math.sqrt(8.0 * params.e_j / params.e_c)
    )
    delta = (2.0 / 3.0) * math.pi**2 * params.e_l
    return PhaseSlipEstimate(e_s=e_s, delta=delta, splitting=e_s**2 / delta)


def _reduced_energy(frequency_ghz: float, temperature: float) -> float:
    if temperature <= 0:
        raise ValidationError(f"Temperature must be positive, got {temperature}")
    if frequency_ghz < 0:
        raise ValidationError(f"Frequency must be non-negative, got {frequency_ghz}")
    return h * frequency_ghz * GHZ / (k * temperature)


def thermal_population(frequency_ghz: float, temperature: float) -> float:
    """
    Excited-state occupation of a two-level system in equilibrium.

    Args:
        frequency_ghz: Transition frequency in GHz
        temperature: Temperature in K

    Returns:
        p_e = 1 / (1 + exp(h f / k_B T))
    """
    return float(expit(-_reduced_energy(frequency_ghz, temperature)))


def thermal_photon_number(frequency_ghz: float, temperature: float) -> float:
    """Bose-Einstein occupation of a mode at ``frequency_ghz``."""
    x = _reduced_energy(frequency_ghz, temperature)
    if x == 0:
        return math.inf
    return 1.0 / math.expm1(x) if x < 700 else 0.0


def effective_temperature(frequency_ghz: float, n_bar: float) -> float:
    """
    Temperature at which a mode holds ``n_bar`` thermal photons.

    Raises:
        ValidationError: If frequency_ghz <= 0 or n_bar < 0
    """
    if frequency_ghz <= 0:
        raise ValidationError(f"Frequency must be positive, got {frequency_ghz}")
    if n_bar < 0:
        raise ValidationError(f"n_bar must be non-negative, got {n_bar}")
    if n_bar == 0:
        return 0.0
    return h * frequency_ghz * GHZ / (k * math.log1p(1.0 / n_bar))
