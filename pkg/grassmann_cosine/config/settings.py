"""
Configuration for the Grassmann cosine transform toolkit
"""

from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application configuration, read from GCT_* variables and an optional .env file"""

    model_config = SettingsConfigDict(
        env_prefix="GCT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Worker cap for quadrature blocks and Monte Carlo batches
    threads: int = Field(default=1, ge=1)

    # Logging
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_file: Optional[str] = None

    # Numerical defaults
    nodes_per_dim: int = Field(default=24, ge=8)
    rel_tol: float = Field(default=1e-10, gt=0)
    max_refinements: int = Field(default=3, ge=1)
    mc_batch_size: int = Field(default=4096, ge=1)
    show_progress: bool = False

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return value


def get_settings() -> Settings:
    """Current settings instance."""
    return settings


def reload_settings() -> Settings:
    """Re-read the environment, e.g. after the CLI exported GCT_* overrides."""
    global settings
    settings = Settings()
    return settings


# Global settings instance
settings = Settings()
