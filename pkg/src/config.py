"""
Configuration management for pilift.

Settings come from (lowest to highest precedence) field defaults, an optional
YAML file, a ``.env`` file and ``PILIFT_*`` environment variables.
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class GroupConfig(BaseModel):
    """Configuration for group construction."""
    builtin_search: List[str] = Field(default_factory=list)  # extra directories holding .perm files


class CharTableConfig(BaseModel):
    """Configuration for the Dixon-Schneider engine."""
    max_prime_attempts: int = 32
    verify_tables: bool = True
    krylov_attempts: int = 4


class VerificationConfig(BaseModel):
    """Configuration for property suites and corpus runs."""
    series_cap: int = 64
    tower_conjugacy_limit: int = 32
    reciprocity_samples: int = 12
    oracle_order_limit: int = 48
    seed: int = 0
    parallelism: int = 1
    include_timing: bool = False


class ServerConfig(BaseModel):
    """Configuration for the MCP server."""
    name: str = "pilift"
    version: str = "1.0.0"


class Settings(BaseSettings):
    """Main pilift configuration."""
    order_cap: int = 5000
    log_level: str = "INFO"
    log_format: str = "text"

    groups: GroupConfig = Field(default_factory=GroupConfig)
    char_table: CharTableConfig = Field(default_factory=CharTableConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    server: ServerConfig = Field(default_factory=ServerConfig)

    model_config = SettingsConfigDict(
        env_prefix="PILIFT_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    @field_validator("log_format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        if value not in ("text", "json"):
            raise ValueError(f"log_format must be 'text' or 'json', got {value!r}")
        return value

    @field_validator("order_cap")
    @classmethod
    def _check_cap(cls, value: int) -> int:
        if value < 1:
            raise ValueError("order_cap must be positive")
        return value


def load_config(config_path: Optional[str] = None) -> Settings:
    """
    Load configuration from a YAML file and environment variables.

    Args:
        config_path: Path to YAML config file. If None, uses PILIFT_CONFIG_PATH
            or ``config/pilift.yaml``.

    Returns:
        Settings instance with loaded configuration.
    """
    if config_path is None:
        config_path = os.getenv("PILIFT_CONFIG_PATH", "config/pilift.yaml")

    config_data: Dict[str, Any] = {}
    if Path(config_path).exists():
        with open(config_path, "r", encoding="utf-8") as f:
            yaml_data = yaml.safe_load(f) or {}
            if yaml_data:
                config_data = _map_yaml_to_config(yaml_data)

    settings = Settings(**config_data)
    # init kwargs outrank the environment in pydantic-settings; re-apply the env on top
    env_settings = Settings()
    for name in Settings.model_fields:
        if name in env_settings.model_fields_set:
            setattr(settings, name, getattr(env_settings, name))
    return settings


def _map_yaml_to_config(yaml_data: Dict[str, Any]) -> Dict[str, Any]:
    """Map the YAML sections onto Settings kwargs."""
    mapped: Dict[str, Any] = {}

    engine = yaml_data.get("engine") or {}
    if isinstance(engine, dict):
        mapped.update({k: v for k, v in engine.items() if not isinstance(v, dict)})

    for key in ("order_cap", "log_level", "log_format"):
        if key in yaml_data:
            mapped[key] = yaml_data[key]

    for section in ("groups", "char_table", "verification", "server"):
        value = yaml_data.get(section)
        if isinstance(value, dict):
            mapped[section] = value

    return mapped


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return load_config()


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment."""
    get_settings.cache_clear()
