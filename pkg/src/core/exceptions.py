"""Core engine exceptions."""

from typing import Optional


class FluxMolBaseException(Exception):
    """Base exception class for the fluxmol engine."""

    def __init__(self, message: str, code: Optional[str] = None):
        self.message = message
        self.code = code
        super().__init__(self.message)


class ValidationError(FluxMolBaseException):
    """Raised when input data validation fails."""

    def __init__(self, message: str, code: str = "VALIDATION_ERROR"):
        super().__init__(message, code)


class InvalidBasisError(ValidationError):
    """Raised when an oscillator basis description is unusable."""

    def __init__(self, message: str):
        super().__init__(message, "INVALID_BASIS")


class ContractViolationError(FluxMolBaseException):
    """Raised when an operation receives input that breaks its contract."""

    def __init__(self, message: str):
        super().__init__(message, "CONTRACT_VIOLATION")


class SingularityError(FluxMolBaseException):
    """Raised when a formula is evaluated at its singular point."""

    def __init__(self, message: str):
        super().__init__(message, "SINGULARITY")


class DomainError(FluxMolBaseException):
    """Raised when an argument lies outside a formula's domain."""

    def __init__(self, message: str):
        super().__init__(message, "DOMAIN_ERROR")


class IterationError(FluxMolBaseException):
    """Raised when an iterative solver fails to converge."""

    def __init__(self, message: str, iterations: int = 0):
        self.iterations = iterations
        super().__init__(message, "ITERATION_ERROR")


class DiagonalizationError(FluxMolBaseException):
    """Raised when the eigensolver fails or its residual check is violated."""

    def __init__(self, message: str):
        super().__init__(message, "DIAGONALIZATION_ERROR")


class ConfigurationError(FluxMolBaseException):
    """Raised when a device configuration is invalid."""

    def __init__(self, message: str, key: Optional[str] = None):
        self.key = key
        super().__init__(message, "CONFIGURATION_ERROR")


class DataFormatError(FluxMolBaseException):
    """Raised when a spectroscopy data file is malformed."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        super().__init__(message, "DATA_FORMAT_ERROR")


class OutputError(FluxMolBaseException):
    """Raised when an input file cannot be read or a result file cannot be written."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(message, "IO_ERROR")
