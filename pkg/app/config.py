import threading
from pathlib import Path
from typing import Optional

import toml
from pydantic import BaseModel, Field


def get_project_root() -> Path:
    """Get the project root directory"""
    return Path(__file__).resolve().parent.parent


PROJECT_ROOT = get_project_root()


class EngineSettings(BaseModel):
    """Configuration for exact arithmetic and its float embedding"""

    float_precision: int = Field(
        30, description="Decimal digits of pi used by to_float"
    )
    interval_start_bits: int = Field(
        64, description="Initial interval precision for sign refinement"
    )
    interval_max_bits: int = Field(
        65536, description="Precision cap for sign refinement"
    )


class OracleSettings(BaseModel):
    """Configuration for the Gauss-Legendre quadrature oracle"""

    nodes: int = Field(64, description="Gauss-Legendre nodes per panel")
    panels: int = Field(8, description="Composite panels on [0, 1]")
    tol: float = Field(1e-8, description="Circle-distance tolerance")


class FuzzSettings(BaseModel):
    """Configuration for the seeded property suites"""

    cases: int = Field(200, description="Default number of cases per suite")
    seed: int = Field(0, description="Default generator seed")
    max_harmonic: int = Field(6, description="Largest harmonic index generated")
    max_power: int = Field(3, description="Largest t-power generated")
    coefficient_bits: int = Field(
        16, description="Bit size of generated numerators and denominators"
    )


class LogSettings(BaseModel):
    level: str = Field("INFO", description="Console log level")
    file_level: str = Field("DEBUG", description="File log level")
    log_dir: str = Field("logs", description="Directory for log files")
    to_file: bool = Field(False, description="Whether to write a log file")


class AppConfig(BaseModel):
    engine: EngineSettings = Field(default_factory=EngineSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    fuzz: FuzzSettings = Field(default_factory=FuzzSettings)
    log: LogSettings = Field(default_factory=LogSettings)


class Config:
    _instance = None
    _lock = threading.Lock()
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._initialized:
            with self._lock:
                if not self._initialized:
                    self._config = None
                    self._load_initial_config()
                    self._initialized = True

    @staticmethod
    def _get_config_path() -> Optional[Path]:
        root = PROJECT_ROOT
        config_path = root / "config" / "config.toml"
        if config_path.exists():
            return config_path
        example_path = root / "config" / "config.example.toml"
        if example_path.exists():
            return example_path
        return None

    def _load_config(self) -> dict:
        config_path = self._get_config_path()
        if config_path is None:
            return {}
        with config_path.open("r", encoding="utf-8") as f:
            return toml.load(f)

    def _load_initial_config(self):
        raw_config = self._load_config()

        # unknown sections are ignored; known ones are validated
        config_dict = {
            name: raw_config[name]
            for name in ("engine", "oracle", "fuzz", "log")
            if isinstance(raw_config.get(name), dict)
        }
        self._config = AppConfig(**config_dict)

    @property
    def engine(self) -> EngineSettings:
        return self._config.engine

    @property
    def oracle(self) -> OracleSettings:
        return self._config.oracle

    @property
    def fuzz(self) -> FuzzSettings:
        return self._config.fuzz

    @property
    def log(self) -> LogSettings:
        return self._config.log


config = Config()
