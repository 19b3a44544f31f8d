"""fluxmol - spectrum, noise budget and fitting engine for two-fluxonium molecules."""

__version__ = "1.0.0"
