"""Device configuration files: sectioned ``key = value`` text with ``#`` comments."""

import configparser
from typing import Any, Optional

import pydantic

from src.core.exceptions import ConfigurationError
from src.processors.base import FileProcessor
from src.schemas.circuit import MoleculeParams
from src.schemas.device import DeviceConfig
from src.schemas.noise import AntennaConfig, FluxNoiseModel

SECTION_KEYS: dict[str, tuple[str, ...]] = {
    "device": ("name", "basis_dim"),
    "params": ("e_j", "e_c", "e_l", "alpha"),
    "noise": ("a_com", "a_diff", "f_ir"),
    "antenna": ("f_a", "kappa_over_2pi", "chi_over_2pi", "n_bar"),
}
REQUIRED_PARAMS = ("e_j", "e_c", "e_l")
TEXT_KEYS = {"device.name"}
INTEGER_KEYS = {"device.basis_dim"}


def _convert(section: str, key: str, raw: str) -> Any:
    qualified = f"{section}.{key}"
    if qualified in TEXT_KEYS:
        return raw
    try:
        return int(raw) if qualified in INTEGER_KEYS else float(raw)
    except ValueError as e:
        kind = "an integer" if qualified in INTEGER_KEYS else "a number"
        raise ConfigurationError(
            f"Key '{key}' in [{section}] must be {kind}, got {raw!r}", key=key
        ) from e


def _validated(model: type[pydantic.BaseModel], section: str, values: dict[str, Any]) -> Any:
    try:
        return model(**values)
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        key = str(first["loc"][0]) if first["loc"] else section
        raise ConfigurationError(
            f"Invalid value for '{key}' in [{section}]: {first['msg']}", key=key
        ) from e


class DeviceConfigProcessor(FileProcessor[DeviceConfig]):
    """Parse a device file into a validated DeviceConfig."""

    def __init__(self) -> None:
        super().__init__(name="device_config")

    def parse_text(self, text: str, result_warnings: list[str]) -> DeviceConfig:
        """
        Parse the ``[device]``, ``[params]``, ``[noise]`` and ``[antenna]`` sections.

        Raises:
            ConfigurationError: On malformed syntax, a missing required key or an
                invalid value; the error names the offending key
        """
        parser = configparser.ConfigParser(
            comment_prefixes=("#",), inline_comment_prefixes=("#",), interpolation=None
        )
        try:
            parser.read_string(text)
        except configparser.Error as e:
            raise ConfigurationError(f"Malformed configuration: {e}") from e

        sections: dict[str, dict[str, Any]] = {name: {} for name in SECTION_KEYS}
        for section in parser.sections():
            if section not in SECTION_KEYS:
                result_warnings.append(f"Unknown section [{section}] ignored")
                continue
            for key, raw in parser.items(section):
                if key not in SECTION_KEYS[section]:
                    result_warnings.append(f"Unknown key '{key}' in [{section}] ignored")
                    continue
                sections[section][key] = _convert(section, key, raw.strip())

        if not parser.has_section("params"):
            raise ConfigurationError("Missing [params] section", key="params")
        for key in REQUIRED_PARAMS:
            if key not in sections["params"]:
                raise ConfigurationError(f"Missing required key '{key}' in [params]", key=key)

        params = _validated(MoleculeParams, "params", sections["params"])
        noise = _validated(FluxNoiseModel, "noise", sections["noise"])
        antenna: Optional[AntennaConfig] = None
        if parser.has_section("antenna"):
            antenna = _validated(AntennaConfig, "antenna", sections["antenna"])

        device = dict(sections["device"])
        return _validated(
            DeviceConfig,
            "device",
            {**device, "params": params, "noise": noise, "antenna": antenna},
        )
