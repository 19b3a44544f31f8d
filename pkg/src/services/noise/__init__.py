"""Decoherence models: flux noise, critical-current noise and estimates."""

from src.services.noise.budget import AsymmetryScan, NoiseBudget, asymmetry_scan, dephasing_budget
from src.services.noise.critical_current import (
    critical_current_dephasing,
    effective_amplitude,
)
from src.services.noise.estimates import (
    PhaseSlipEstimate,
    effective_temperature,
    phase_slip_estimate,
    photon_noise_rate,
    thermal_photon_number,
    thermal_population,
)
from src.services.noise.flux_noise import (
    DephasingResult,
    coherence_time,
    echo_ramsey_ratio,
    echo_rate,
    infer_amplitude,
    one_over_f_psd,
    ramsey_rate_common,
    ramsey_rate_diff,
    solve_ramsey_rate,
)

__all__ = [
    "AsymmetryScan",
    "DephasingResult",
    "NoiseBudget",
    "PhaseSlipEstimate",
    "asymmetry_scan",
    "coherence_time",
    "critical_current_dephasing",
    "dephasing_budget",
    "echo_ramsey_ratio",
    "echo_rate",
    "effective_amplitude",
    "effective_temperature",
    "infer_amplitude",
    "one_over_f_psd",
    "phase_slip_estimate",
    "photon_noise_rate",
    "ramsey_rate_common",
    "ramsey_rate_diff",
    "solve_ramsey_rate",
    "thermal_photon_number",
    "thermal_population",
]
