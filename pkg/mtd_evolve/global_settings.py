import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from mtd_evolve.constants import (
    DEFAULT_CSV_FLOAT_FORMAT,
    DEFAULT_LOG_DATE_FORMAT,
    DEFAULT_LOG_FORMAT,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_SEED,
)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="MTD_")

    OUTPUT_DIR: str = Field(
        default=DEFAULT_OUTPUT_DIR, description="Root directory for result sets"
    )
    DEFAULT_SEED: int = Field(
        default=DEFAULT_SEED, description="Master seed used when none is given"
    )
    WORKERS: int = Field(
        default=1, ge=1, description="Worker processes used to execute runs"
    )
    CSV_FLOAT_FORMAT: str = Field(
        default=DEFAULT_CSV_FLOAT_FORMAT, description="printf format for CSV floats"
    )

    LOG_LEVEL: str = Field(default=DEFAULT_LOG_LEVEL, description="Root log level")
    LOG_FORMAT: str = Field(
        default=DEFAULT_LOG_FORMAT, description="Log message format"
    )
    LOG_DATE_FORMAT: str = Field(
        default=DEFAULT_LOG_DATE_FORMAT, description="Log timestamp format"
    )


# Environment-specific settings
class DevelopmentSettings(Settings):
    """Development environment settings."""

    LOG_LEVEL: str = "DEBUG"


class ProductionSettings(Settings):
    """Production environment settings."""

    LOG_LEVEL: str = "WARNING"


class TestingSettings(Settings):
    """Testing environment settings."""

    LOG_LEVEL: str = "ERROR"
    OUTPUT_DIR: str = "./test-results"


def get_environment_settings() -> Settings:
    """Get environment-specific settings."""
    env = os.getenv("ENVIRONMENT", "development").lower()

    if env == "production":
        return ProductionSettings()
    if env == "testing":
        return TestingSettings()
    return DevelopmentSettings()


global_settings = get_environment_settings()
