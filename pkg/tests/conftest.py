"""Global test configuration and fixtures."""

from collections.abc import Callable, Generator
from pathlib import Path

import pytest

from src.core.config import Settings, get_settings
from src.schemas.circuit import MoleculeParams
from src.schemas.noise import FluxNoiseModel

DEVICE_A = MoleculeParams(e_j=9.4, e_c=3.4, e_l=1.2, alpha=0.006)
DEVICE_B = MoleculeParams(e_j=9.5, e_c=3.4, e_l=1.1, alpha=0.007)
DEVICE_C = MoleculeParams(e_j=9.8, e_c=3.3, e_l=1.2, alpha=0.03)

NOISE_A = FluxNoiseModel(a_com=6e-6, a_diff=10e-6, f_ir=1.0)

DEVICE_A_CONFIG = """\
# device A
[device]
name = A
basis_dim = 30

[params]
e_j = 9.4
e_c = 3.4
e_l = 1.2
alpha = 0.006

[noise]
a_com = 6e-6
a_diff = 10e-6
f_ir = 1.0

[antenna]
f_a = 7.875
kappa_over_2pi = 6.0
"""


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Run every test against default settings, free of FLUXMOL_* env vars."""
    for name in list(Settings.model_fields):
        monkeypatch.delenv(f"FLUXMOL_{name.upper()}", raising=False)
    monkeypatch.setenv("FLUXMOL_THREADS", "2")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def device_a() -> MoleculeParams:
    """Device A of the three-device reference set."""
    return DEVICE_A


@pytest.fixture(scope="session")
def device_b() -> MoleculeParams:
    """Device B."""
    return DEVICE_B


@pytest.fixture(scope="session")
def device_c() -> MoleculeParams:
    """Device C (largest asymmetry)."""
    return DEVICE_C


@pytest.fixture(scope="session")
def harmonic() -> MoleculeParams:
    """Junction-free molecule: two coupled oscillators."""
    return MoleculeParams(e_j=0.0, e_c=3.4, e_l=1.2, alpha=0.0)


@pytest.fixture(scope="session")
def symmetric_a() -> MoleculeParams:
    """Device A with the asymmetry removed."""
    return DEVICE_A.model_copy(update={"alpha": 0.0})


@pytest.fixture(scope="session")
def noise_a() -> FluxNoiseModel:
    """Flux-noise amplitudes inferred for device A."""
    return NOISE_A


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Factory writing a text file under tmp_path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def device_a_config(write_file: Callable[[str, str], Path]) -> Path:
    """Config file for device A."""
    return write_file("device_a.ini", DEVICE_A_CONFIG)


@pytest.fixture
def config_without(write_file: Callable[[str, str], Path]) -> Callable[[str], Path]:
    """Factory for a device A config with one ``key = value`` line removed."""

    def _without(key: str) -> Path:
        lines = [
            line for line in DEVICE_A_CONFIG.splitlines() if not line.startswith(f"{key} =")
        ]
        return write_file(f"without_{key}.ini", "\n".join(lines) + "\n")

    return _without


@pytest.fixture(scope="session")
def devices() -> dict[str, MoleculeParams]:
    """All three reference devices by name."""
    return {"A": DEVICE_A, "B": DEVICE_B, "C": DEVICE_C}
