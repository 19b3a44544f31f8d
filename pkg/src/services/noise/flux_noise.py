"""1/f flux-noise dephasing with the self-consistent Ramsey logarithm.

A 1/f spectrum S = A^2/|omega| dephases a qubit whose frequency depends on
the noisy quantity with slope S_f at a Ramsey rate

    Gamma = 2 pi g(A, eta) |S_f|,   eta = ln(Gamma / (2 pi f_ir))

so Gamma and eta have to be solved together. ``g`` is either the
conventional ``A sqrt(eta)`` or the literal ``sqrt(A eta)``.
"""

import math
from dataclasses import dataclass
from typing import Optional

from scipy.optimize import brentq

from src.core.config import get_settings
from src.core.exceptions import DomainError, IterationError, SingularityError, ValidationError
from src.core.logging import get_logger
from src.schemas.noise import FluxNoiseModel, FormulaMode

logger = get_logger(__name__)

GHZ = 1e9
ETA_START = 10.0
ETA_MIN = 1.0
ETA_MAX = 40.0
MAX_ITERATIONS = 100
TOLERANCE = 1e-6


@dataclass(frozen=True)
class DephasingResult:
    """Ramsey dephasing rate in 1/s and the logarithmic factor it was solved with."""

    gamma: float
    eta: float
    iterations: int
    mode: FormulaMode
    pinned: bool = False

    @property
    def t2(self) -> float:
        """1/gamma in seconds (inf when gamma is 0)."""
        return coherence_time(self.gamma)


def one_over_f_psd(amplitude: float, omega: float) -> float:
    """
    1/f power spectral density A^2/|omega|.

    Args:
        amplitude: Noise amplitude (Phi0 units)
        omega: Angular frequency in rad/s

    Returns:
        Spectral density in Phi0^2 per rad/s

    Raises:
        SingularityError: If omega is 0
    """
    if omega == 0:
        raise SingularityError("1/f spectral density is singular at omega = 0")
    if amplitude < 0:
        raise ValidationError(f"Noise amplitude must be non-negative, got {amplitude}")
    return amplitude**2 / abs(omega)


def coherence_time(rate: float) -> float:
    """
    Time constant 1/rate.

    Raises:
        ValidationError: If the rate is negative
    """
    if rate < 0:
        raise ValidationError(f"Rate must be non-negative, got {rate}")
    return math.inf if rate == 0 else 1.0 / rate


def _noise_factor(amplitude: float, eta: float, mode: FormulaMode) -> float:
    if mode is FormulaMode.LITERAL:
        return math.sqrt(amplitude * eta)
    return amplitude * math.sqrt(eta)


def solve_ramsey_rate(
    amplitude: float,
    slope: float,
    f_ir: Optional[float] = None,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
    eta_start: float = ETA_START,
    tolerance: float = TOLERANCE,
    max_iterations: int = MAX_ITERATIONS,
) -> DephasingResult:
    """
    Solve Gamma = 2 pi g(A, eta) |slope| with eta = ln(Gamma / (2 pi f_ir)).

    Fixed-point iteration on eta starts from ``eta_start``; if it leaves the
    physical range it falls back to a bracketed root search on
    [1, 40]. When no root with eta >= 1 exists the rate sits below the
    infrared resolution, so eta is pinned to 1.

    Args:
        amplitude: Fractional noise amplitude (Phi0 units for flux)
        slope: Frequency sensitivity in GHz per unit of the noisy quantity
        f_ir: Infrared cutoff in Hz (defaults to settings.f_ir)
        mode: Formula reading
        eta_start: Initial eta
        tolerance: Convergence tolerance
        max_iterations: Iteration cap

    Returns:
        DephasingResult

    Raises:
        ValidationError: If amplitude < 0, f_ir <= 0 or slope is not finite
        IterationError: If the root lies above eta = 40
    """
    f_ir = get_settings().f_ir if f_ir is None else f_ir
    if amplitude < 0 or f_ir <= 0:
        raise ValidationError("amplitude must be >= 0 and f_ir > 0")
    if not math.isfinite(slope):
        raise ValidationError(f"Slope must be finite, got {slope}")
    mode = FormulaMode(mode)

    slope_hz = abs(slope) * GHZ
    if slope_hz == 0 or amplitude == 0:
        return DephasingResult(gamma=0.0, eta=0.0, iterations=0, mode=mode)

    def rate(eta: float) -> float:
        return 2.0 * math.pi * _noise_factor(amplitude, eta, mode) * slope_hz

    def next_eta(eta: float) -> float:
        return math.log(rate(eta) / (2.0 * math.pi * f_ir))

    eta = eta_start
    for iteration in range(1, max_iterations + 1):
        updated = next_eta(eta)
        if updated < ETA_MIN:
            break
        if abs(updated - eta) < 0.1 * tolerance:
            return DephasingResult(
                gamma=rate(updated), eta=updated, iterations=iteration, mode=mode
            )
        eta = updated

    logger.info("ramsey_fixed_point_fallback", amplitude=amplitude, slope=slope)

    def residual(eta: float) -> float:
        return eta - next_eta(eta)

    if residual(ETA_MIN) > 0:
        logger.debug("ramsey_eta_pinned", amplitude=amplitude, slope=slope)
        return DephasingResult(
            gamma=rate(ETA_MIN), eta=ETA_MIN, iterations=max_iterations, mode=mode, pinned=True
        )
    if residual(ETA_MAX) < 0:
        raise IterationError(
            f"No Ramsey fixed point with eta <= {ETA_MAX}", iterations=max_iterations
        )
    eta = brentq(residual, ETA_MIN, ETA_MAX, xtol=0.1 * tolerance)
    return DephasingResult(gamma=rate(eta), eta=eta, iterations=max_iterations, mode=mode)


def ramsey_rate_common(
    model: FluxNoiseModel,
    slope: float,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
) -> DephasingResult:
    """
    Ramsey rate from common-mode flux noise.

    Args:
        model: Flux noise amplitudes and cutoff
        slope: d f_ge / d Phi_ext in GHz per Phi0
        mode: Formula reading

    Returns:
        DephasingResult
    """
    return solve_ramsey_rate(model.a_com, slope, model.f_ir, mode)


def ramsey_rate_diff(
    model: FluxNoiseModel,
    phi_ext: float,
    alpha_slope: float,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
) -> DephasingResult:
    """
    Ramsey rate from differential-mode flux noise.

    The effective slope is |d f_ge / d(alpha/2)| / Phi_ext.

    Args:
        model: Flux noise amplitudes and cutoff
        phi_ext: Applied flux in units of Phi0
        alpha_slope: d f_ge / d(alpha/2) in GHz
        mode: Formula reading

    Returns:
        DephasingResult

    Raises:
        SingularityError: If phi_ext is 0
    """
    if phi_ext == 0:
        raise SingularityError("Differential-mode rate divides by Phi_ext; Phi_ext = 0")
    return solve_ramsey_rate(model.a_diff, abs(alpha_slope) / abs(phi_ext), model.f_ir, mode)


def echo_ramsey_ratio(gamma_r: float, f_ir: Optional[float] = None) -> float:
    """
    Gamma_R / Gamma_E = sqrt(ln(Gamma_R / (2 pi f_ir)) / ln 2) under 1/f noise.

    Raises:
        DomainError: If gamma_r <= 2 pi f_ir
    """
    f_ir = get_settings().f_ir if f_ir is None else f_ir
    floor = 2.0 * math.pi * f_ir
    if not gamma_r > floor:
        raise DomainError(f"Echo ratio needs gamma_r > 2 pi f_ir = {floor:.6g}, got {gamma_r}")
    return math.sqrt(math.log(gamma_r / floor) / math.log(2.0))


def echo_rate(gamma_r: float, f_ir: Optional[float] = None) -> float:
    """Echo dephasing rate implied by a Ramsey rate."""
    return gamma_r / echo_ramsey_ratio(gamma_r, f_ir)


def infer_amplitude(
    gamma_measured: float,
    slope: float,
    f_ir: Optional[float] = None,
    mode: FormulaMode = FormulaMode.CONVENTIONAL,
) -> float:
    """
    Noise amplitude that reproduces a measured Ramsey rate.

    eta is taken from the measured rate, so the result is consistent with
    :func:`solve_ramsey_rate`.

    Args:
        gamma_measured: Ramsey dephasing rate in 1/s
        slope: Sensitivity in GHz per unit of the noisy quantity
        f_ir: Infrared cutoff in Hz (defaults to settings.f_ir)
        mode: Formula reading

    Returns:
        Amplitude in units of the noisy quantity (Phi0 for flux)

    Raises:
        DomainError: If gamma_measured <= 2 pi f_ir
        SingularityError: If slope is 0
    """
    f_ir = get_settings().f_ir if f_ir is None else f_ir
    if slope == 0:
        raise SingularityError("Cannot infer an amplitude at zero sensitivity")
    floor = 2.0 * math.pi * f_ir
    if not gamma_measured > floor:
        raise DomainError(
            f"Inference needs gamma > 2 pi f_ir = {floor:.6g}, got {gamma_measured}"
        )
    eta = math.log(gamma_measured / floor)
    factor = gamma_measured / (2.0 * math.pi * abs(slope) * GHZ)
    if FormulaMode(mode) is FormulaMode.LITERAL:
        return factor**2 / eta
    return factor / math.sqrt(eta)
