"""Per-mechanism dephasing budget at one flux point and asymmetry scans."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.core.exceptions import DomainError
from src.core.logging import get_logger
from src.quantum.operators import ModeBasis
from src.schemas.circuit import FluxPoint, MoleculeParams, as_flux_point
from src.schemas.noise import AntennaConfig, CriticalCurrentTarget, FluxNoiseModel, FormulaMode
from src.services.circuit.hamiltonian import molecule_basis
from src.services.noise.critical_current import (
    DEFAULT_ARRAY_JUNCTIONS,
    DEFAULT_REL_AMP,
    critical_current_dephasing,
)
from src.services.noise.estimates import photon_noise_rate
from src.services.noise.flux_noise import (
    coherence_time,
    echo_rate,
    ramsey_rate_common,
    ramsey_rate_diff,
)
from src.services.spectrum.sensitivity import (
    asymmetry_sensitivity,
    flux_sensitivity,
    transition_frequency,
)
from src.services.spectrum.sweep import map_ordered

logger = get_logger(__name__)


@dataclass(frozen=True)
class NoiseBudget:
    """Dephasing rates (1/s) of every modelled mechanism at one flux point."""

    phi_ext: float
    f_ge: float
    flux_slope: float
    alpha_slope: float
    mode: FormulaMode
    gamma_common: float
    gamma_diff: float
    gamma_ic_junction: float
    gamma_ic_array: float
    gamma_photon: Optional[float]
    t2_ramsey: float
    t2_echo: Optional[float]

    @property
    def gamma_flux(self) -> float:
        """Common plus differential flux-noise rate."""
        return self.gamma_common + self.gamma_diff

    @property
    def gamma_total(self) -> float:
        """Flux-noise plus photon-noise rate."""
        return self.gamma_flux + (self.gamma_photon or 0.0)

    def rows(self) -> list[tuple[str, float]]:
        """Mechanism name and rate, in report order."""
        rows = [
            ("gamma_common", self.gamma_common),
            ("gamma_diff", self.gamma_diff),
            ("gamma_flux", self.gamma_flux),
            ("gamma_ic_junction", self.gamma_ic_junction),
            ("gamma_ic_array", self.gamma_ic_array),
        ]
        if self.gamma_photon is not None:
            rows.append(("gamma_photon", self.gamma_photon))
        rows.append(("gamma_total", self.gamma_total))
        return rows


def dephasing_budget(
    params: MoleculeParams,
    flux: FluxPoint | float,
    model: FluxNoiseModel,
    basis: Optional[ModeBasis] = None,
    antenna: Optional[AntennaConfig] = None,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
    ic_rel_amp: float = DEFAULT_REL_AMP,
    n_array: int = DEFAULT_ARRAY_JUNCTIONS,
) -> NoiseBudget:
    """
    Evaluate every dephasing mechanism at one flux point.

    The differential-mode rate is reported as 0 at Phi_ext = 0, where its
    flux-normalized slope is undefined. The photon rate is included only
    when the antenna provides both chi and n_bar.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        model: Flux-noise amplitudes
        basis: Per-mode basis (defaults to the molecule basis)
        antenna: Readout antenna, optional
        mode: Formula reading for the flux-noise rates
        ic_rel_amp: Fractional critical-current amplitude
        n_array: Junctions per array

    Returns:
        NoiseBudget
    """
    phi_ext = as_flux_point(flux).phi_ext
    basis = molecule_basis(params) if basis is None else basis

    f_ge = transition_frequency(params, phi_ext, basis)
    flux_slope = flux_sensitivity(params, phi_ext, basis)
    alpha_slope = asymmetry_sensitivity(params, phi_ext, basis)

    common = ramsey_rate_common(model, flux_slope, mode).gamma
    diff = ramsey_rate_diff(model, phi_ext, alpha_slope, mode).gamma if phi_ext != 0 else 0.0
    ic_junction = critical_current_dephasing(
        params, phi_ext, basis, CriticalCurrentTarget.SMALL_JUNCTION, ic_rel_amp, n_array,
        model.f_ir,
    ).gamma
    ic_array = critical_current_dephasing(
        params, phi_ext, basis, CriticalCurrentTarget.ARRAY, ic_rel_amp, n_array, model.f_ir
    ).gamma

    photon: Optional[float] = None
    if antenna is not None and antenna.chi is not None and antenna.n_bar is not None:
        photon = photon_noise_rate(antenna.n_bar, antenna.kappa, antenna.chi)

    ramsey = common + diff + (photon or 0.0)
    try:
        t2_echo: Optional[float] = coherence_time(echo_rate(ramsey, model.f_ir))
    except DomainError:
        t2_echo = None

    logger.debug("dephasing_budget", phi_ext=phi_ext, gamma_common=common, gamma_diff=diff)
    return NoiseBudget(
        phi_ext=phi_ext,
        f_ge=f_ge,
        flux_slope=flux_slope,
        alpha_slope=alpha_slope,
        mode=FormulaMode(mode),
        gamma_common=common,
        gamma_diff=diff,
        gamma_ic_junction=ic_junction,
        gamma_ic_array=ic_array,
        gamma_photon=photon,
        t2_ramsey=coherence_time(ramsey),
        t2_echo=t2_echo,
    )


@dataclass(frozen=True)
class AsymmetryScan:
    """Differential-mode rate ``gamma_diff[a, p]`` for alphas[a] at flux_axis[p]."""

    flux_axis: np.ndarray
    alphas: np.ndarray
    gamma_diff: np.ndarray


def asymmetry_scan(
    params: MoleculeParams,
    flux_grid: Sequence[float] | np.ndarray,
    alphas: Sequence[float],
    model: FluxNoiseModel,
    basis: Optional[ModeBasis] = None,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
) -> AsymmetryScan:
    """
    Differential-mode Ramsey rate against flux for several asymmetries.

    Points at Phi_ext = 0 are reported as NaN.

    Args:
        params: Circuit energies (alpha is replaced by each scanned value)
        flux_grid: Flux values in units of Phi0
        alphas: Asymmetries to scan
        model: Flux-noise amplitudes
        basis: Per-mode basis (defaults to the molecule basis)
        mode: Formula reading

    Returns:
        AsymmetryScan
    """
    flux_axis = np.asarray(flux_grid, dtype=float).ravel()
    alpha_axis = np.asarray(alphas, dtype=float).ravel()
    basis = molecule_basis(params) if basis is None else basis

    def rate(task: tuple[float, float]) -> float:
        alpha, phi_ext = task
        if phi_ext == 0:
            return float("nan")
        shifted = params.model_copy(update={"alpha": alpha})
        slope = asymmetry_sensitivity(shifted, phi_ext, basis)
        return ramsey_rate_diff(model, phi_ext, slope, mode).gamma

    tasks = [(float(a), float(p)) for a in alpha_axis for p in flux_axis]
    values = np.array(map_ordered(rate, tasks)).reshape(alpha_axis.size, flux_axis.size)
    return AsymmetryScan(flux_axis=flux_axis, alphas=alpha_axis, gamma_diff=values)
