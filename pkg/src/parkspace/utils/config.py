"""
Configuration for parkspace.

A :class:`Config` is read from YAML, then overridden by ``PARKSPACE_*``
environment variables, then by command-line flags. The CLI installs the
result as the process-global instance returned by :func:`get_config`.
"""

import os
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
ENV_PREFIX = "PARKSPACE_"

CONFIG_SEARCH_PATHS = (
    Path("config/config.yaml"),
    Path("parkspace.yaml"),
    Path("~/.parkspace/config.yaml"),
)


class LoggingConfig(BaseModel):
    """Where and how much to log."""
    model_config = ConfigDict(validate_assignment=True)

    level: LogLevel = Field(default="WARNING", description="Minimum level written to stderr")
    format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Console record format",
    )
    file_path: Optional[str] = Field(None, description="Optional rotating log file")
    max_file_size: int = Field(default=10 * 1024 * 1024, ge=1024, description="Bytes per log file")
    backup_count: int = Field(default=5, ge=0, description="Rotated files kept")

    @field_validator("level", mode="before")
    @classmethod
    def normalise_level(cls, v: Any) -> Any:
        return v.upper() if isinstance(v, str) else v


class VerifyLimits(BaseModel):
    """Ranges of the infinite families covered by table verification."""
    sym_max_n: int = Field(default=8, ge=2)
    imprimitive_max_m: int = Field(default=8, ge=2)
    imprimitive_max_n: int = Field(default=5, ge=2)
    cyclic_max_m: int = Field(default=12, ge=2)
    dihedral_max_m: int = Field(default=12, ge=3)


class ComputeConfig(BaseModel):
    model_config = ConfigDict(validate_assignment=True)

    threads: int = Field(default=1, ge=1, description="Worker threads for residue scans")
    scan_periods: int = Field(
        default=2, ge=1, description="Periods covered by brute-force cross-checks"
    )
    verify_limits: VerifyLimits = Field(default_factory=VerifyLimits)


class OutputConfig(BaseModel):
    model_config = ConfigDict(validate_assignment=True)

    mode: Literal["json", "text"] = Field(default="json", description="Result rendering on stdout")
    indent: Optional[int] = Field(default=None, ge=0, description="JSON indentation")

    @field_validator("mode", mode="before")
    @classmethod
    def normalise_mode(cls, v: Any) -> Any:
        return v.lower() if isinstance(v, str) else v


def _flag(value: str) -> bool:
    return value.strip().lower() in ("true", "1", "yes", "on")


# environment variable -> (section, field, converter)
ENV_OVERRIDES: Dict[str, Tuple[Optional[str], str, Callable[[str], Any]]] = {
    "THREADS": ("compute", "threads", int),
    "LOG_LEVEL": ("logging", "level", str),
    "LOG_FILE": ("logging", "file_path", str),
    "OUTPUT_MODE": ("output", "mode", str),
    "DEBUG": (None, "debug", _flag),
}


class Config(BaseModel):
    """Complete parkspace configuration."""
    model_config = ConfigDict(validate_assignment=True)

    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    compute: ComputeConfig = Field(default_factory=ComputeConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    project_name: str = Field(default="parkspace")
    environment: Literal["development", "testing", "production"] = Field(default="development")
    debug: bool = Field(default=False, description="Debug logging with source locations")

    def load_from_file(self, config_path: Union[str, Path]) -> "Config":
        """Read a YAML file into a new Config."""
        config_path = Path(config_path)
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")
        with open(config_path, "r", encoding="utf-8") as f:
            return Config.model_validate(yaml.safe_load(f) or {})

    def save_to_file(self, config_path: Union[str, Path]) -> None:
        config_path = Path(config_path)
        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(self.model_dump(), f, default_flow_style=False, indent=2, sort_keys=False)

    def get_env_var(self, key: str, default: Any = None) -> Any:
        return os.getenv(f"{ENV_PREFIX}{key.upper()}", default)

    def update_from_env(self) -> None:
        """Apply every ``PARKSPACE_*`` override that is set."""
        for key, (section, field, convert) in ENV_OVERRIDES.items():
            raw = self.get_env_var(key)
            if not raw:
                continue
            target = getattr(self, section) if section else self
            setattr(target, field, convert(raw))

    def validate_config(self) -> List[str]:
        """Problems that do not make the config invalid but deserve a warning."""
        issues = []

        cpus = os.cpu_count() or 1
        if self.compute.threads > 4 * cpus:
            issues.append(f"compute.threads={self.compute.threads} exceeds 4x the {cpus} available CPUs")

        if self.logging.file_path:
            log_dir = Path(self.logging.file_path).parent
            try:
                log_dir.mkdir(parents=True, exist_ok=True)
            except PermissionError:
                issues.append(f"Cannot create log directory: {log_dir}")

        limits = self.compute.verify_limits
        if limits.imprimitive_max_m > 12 or limits.imprimitive_max_n > 6:
            issues.append("verify_limits for G(m,p,n) are large; table verification may be slow")

        return issues


def find_config_file() -> Optional[Path]:
    for path in CONFIG_SEARCH_PATHS:
        path = path.expanduser()
        if path.exists():
            return path
    return None


def load_config(config_path: Optional[Union[str, Path]] = None) -> Config:
    """File (given or found on the search path) plus environment overrides."""
    path = Path(config_path) if config_path is not None else find_config_file()
    config = Config().load_from_file(path) if path is not None and path.exists() else Config()
    config.update_from_env()
    return config


def create_default_config(config_path: Union[str, Path]) -> Config:
    """Write a default configuration file and return it."""
    config = Config()
    config.save_to_file(config_path)
    return config


_config: Optional[Config] = None


def get_config() -> Config:
    global _config
    if _config is None:
        _config = load_config()
    return _config


def set_config(config: Optional[Config]) -> None:
    """Install ``config`` globally; ``None`` forces a reload on next access."""
    global _config
    _config = config
