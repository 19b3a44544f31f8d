"""Input-file processors for device configurations and spectroscopy data."""

from src.processors.base import FileProcessor, ParseResult
from src.processors.device_config_processor import DeviceConfigProcessor
from src.processors.spectroscopy_processor import SpectroscopyProcessor

__all__ = [
    "DeviceConfigProcessor",
    "FileProcessor",
    "ParseResult",
    "SpectroscopyProcessor",
]
