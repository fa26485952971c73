"""Toolkit configuration using Pydantic Settings V2"""

from pydantic_settings import BaseSettings
from pydantic import Field, ConfigDict, field_validator
from typing import Optional

class Settings(BaseSettings):
    """Toolkit settings with environment variable support.

    Only the output directory and the worker count affect where and how work
    runs; every scientific parameter is a command-line flag.
    """
    model_config = ConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Application
    APP_NAME: str = Field(default="superk")
    APP_DESCRIPTION: str = Field(default="Superstatistical entropies and algorithmic complexity toolkit")
    APP_VERSION: str = Field(default="1.0.0")

    # Logging
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FILE: Optional[str] = Field(default=None)

    # Output placement
    OUTPUT_DIR: str = Field(default=".")
    THREADS: int = Field(default=1)

    @field_validator("THREADS")
    @classmethod
    def _threads_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("THREADS must be at least 1")
        return value

    @field_validator("LOG_LEVEL")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

settings = Settings()
