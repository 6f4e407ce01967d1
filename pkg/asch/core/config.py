"""
Runtime configuration for the association scheme toolkit.
Values come from the environment (prefix ASCH_) or a local .env file.
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """Toolkit settings."""

    model_config = SettingsConfigDict(env_prefix="ASCH_", extra="ignore")

    # 0 means all cores
    threads: int = 0
    log_level: str = "INFO"
    output_dir: str = "out"

    # GF(2^m) arithmetic is offered up to this degree
    max_field_degree: int = 15
    # Gold codes up to this degree; verification holds d + 1 dense n x n float32 matrices
    max_code_degree: int = 5

    @field_validator("threads", mode="before")
    @classmethod
    def _blank_threads(cls, value: Optional[str]):
        if value in (None, ""):
            return 0
        return value

    @property
    def worker_count(self) -> int:
        """Number of worker threads for data-parallel kernels."""
        if self.threads and self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


settings = Settings()
