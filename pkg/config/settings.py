"""
Configuration Management Module

Loads run settings per environment from JSON, applies environment-variable
overrides (after reading a local .env file), validates them, and merges
command-line flags into the RunConfig of one CLI invocation.
"""

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional
import json
import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parent

COMMANDS = ("classify", "geometry", "gaps", "verify", "catalog")
OUTPUT_MODES = ("human", "structured")

ENV_OVERRIDES = {
    "POLAR_GAPS_TRIALS": ("trials", int),
    "POLAR_GAPS_SEED": ("seed", int),
    "POLAR_GAPS_BUDGET": ("point_budget", int),
    "POLAR_GAPS_LOG_LEVEL": ("log_level", str),
}


class ConfigurationError(Exception):
    """Raised when configuration is invalid or missing required fields."""
    pass


@dataclass(frozen=True)
class Settings:
    trials: int = 20
    seed: int = 20240229
    point_budget: int = 10 ** 6
    subspace_budget: int = 10 ** 5
    output: str = "human"
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    degree_cap: int = 64
    search_degree: int = 3
    search_budget: int = 20000
    catalog_equivalents: int = 20
    catalog_workers: int = 1
    timings: bool = False


def validate_settings(settings: Settings) -> None:
    """Raise ConfigurationError on any out-of-range value."""
    if settings.trials < 1:
        raise ConfigurationError(f"trials must be at least 1, got {settings.trials}")
    for name in ("point_budget", "subspace_budget", "search_budget", "degree_cap", "catalog_workers"):
        if getattr(settings, name) < 1:
            raise ConfigurationError(f"{name} must be at least 1, got {getattr(settings, name)}")
    if settings.search_degree < 0 or settings.catalog_equivalents < 0:
        raise ConfigurationError("search_degree and catalog_equivalents must be non-negative")
    if settings.output not in OUTPUT_MODES:
        raise ConfigurationError(f"output must be one of {OUTPUT_MODES}, got {settings.output!r}")
    if not 0 <= settings.seed < 2 ** 64:
        raise ConfigurationError(f"seed must be an unsigned 64-bit integer, got {settings.seed}")
    if not isinstance(logging.getLevelName(settings.log_level.upper()), int):
        raise ConfigurationError(f"unknown log level {settings.log_level!r}")


class BaseConfig:
    """Base configuration: JSON file plus environment overrides."""

    def __init__(self, config_path: Path):
        """
        Initialize configuration from file.

        Args:
            config_path: Path to configuration file
        """
        self.config_path = Path(config_path)
        self.config = self._load_config()
        self.settings = self._build_settings()
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load and parse configuration file."""
        try:
            with open(self.config_path) as f:
                return json.load(f)
        except Exception as e:
            raise ConfigurationError(f"Failed to load config from {self.config_path}: {str(e)}")

    def _build_settings(self) -> Settings:
        known = set(Settings.__dataclass_fields__)
        unknown = set(self.config) - known
        if unknown:
            raise ConfigurationError(f"Unknown configuration fields: {sorted(unknown)}")
        values = dict(self.config)
        for variable, (name, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(variable)
            if raw is None:
                continue
            try:
                values[name] = cast(raw)
            except ValueError:
                raise ConfigurationError(f"Invalid value for {variable}: {raw!r}")
        try:
            return Settings(**values)
        except TypeError as e:
            raise ConfigurationError(f"Invalid configuration in {self.config_path}: {e}")

    def _validate_config(self) -> None:
        validate_settings(self.settings)


class DevelopmentConfig(BaseConfig):
    """Development environment configuration."""

    def _validate_config(self) -> None:
        super()._validate_config()
        if self.settings.trials < 20:
            logger.warning(f"Only {self.settings.trials} chain trials per space in development")


class TestConfig(BaseConfig):
    """Test environment configuration: small trial counts are fine, catalogs stay serial."""

    def _validate_config(self) -> None:
        super()._validate_config()
        if self.settings.catalog_workers != 1:
            raise ConfigurationError("Tests must run the catalog with a single worker")


def load_config(environment: Optional[str] = None, config_dir: Optional[Path] = None) -> BaseConfig:
    """
    Factory function to load the configuration of an environment.

    Args:
        environment: Optional environment name. If not provided, reads POLAR_GAPS_ENV.
        config_dir: Directory holding the JSON files (defaults to this package)

    Returns:
        Configuration instance for specified environment
    """
    env_path = Path(".env")
    if env_path.exists():
        load_dotenv(env_path)

    if environment is None:
        environment = os.getenv("POLAR_GAPS_ENV", "development").lower()

    config_map = {
        "development": (DevelopmentConfig, "config.json"),
        "test": (TestConfig, "test_config.json"),
    }

    if environment not in config_map:
        raise ConfigurationError(f"Invalid environment: {environment}")

    ConfigClass, filename = config_map[environment]
    config_path = Path(config_dir or CONFIG_DIR) / filename

    if not config_path.exists():
        raise ConfigurationError(f"Configuration file not found: {config_path}")

    return ConfigClass(config_path)


def load_settings(environment: Optional[str] = None, config_dir: Optional[Path] = None) -> Settings:
    return load_config(environment, config_dir).settings


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: settings with command-line flags applied."""
    command: str
    form_path: Optional[str]
    settings: Settings
    export_path: Optional[str] = None

    @property
    def trials(self) -> int:
        return self.settings.trials

    @property
    def seed(self) -> int:
        return self.settings.seed

    @property
    def point_budget(self) -> int:
        return self.settings.point_budget

    @property
    def output(self) -> str:
        return self.settings.output


def build_run_config(settings: Settings, command: str, form_path: Optional[str] = None,
                     trials: Optional[int] = None, seed: Optional[int] = None,
                     budget: Optional[int] = None, output: Optional[str] = None,
                     timings: Optional[bool] = None, export_path: Optional[str] = None) -> RunConfig:
    """
    Merge command-line flags over settings.

    Raises:
        ConfigurationError: Unknown command, missing form, or an invalid merged value
    """
    if command not in COMMANDS:
        raise ConfigurationError(f"Unknown command {command!r}; expected one of {COMMANDS}")
    if command != "catalog" and not form_path:
        raise ConfigurationError(f"Command {command!r} requires --form")
    overrides: Dict[str, Any] = {}
    if trials is not None:
        overrides["trials"] = trials
    if seed is not None:
        overrides["seed"] = seed
    if budget is not None:
        overrides["point_budget"] = budget
    if output is not None:
        overrides["output"] = output
    if timings:
        overrides["timings"] = True
    merged = replace(settings, **overrides)
    validate_settings(merged)
    return RunConfig(command, form_path, merged, export_path)
