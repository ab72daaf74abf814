import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Values from a local .env file fill in anything not already exported
load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


class Settings(BaseModel):
    """Runtime knobs. CLI flags override these per invocation."""

    seed: int = Field(default_factory=lambda: _env_int("GTA_SEED", 0))
    exhaustive_max_n: int = Field(default_factory=lambda: _env_int("GTA_EXHAUSTIVE_MAX_N", 24), ge=2)
    sample_size: int = Field(default_factory=lambda: _env_int("GTA_SAMPLE_SIZE", 1000), ge=1)
    axiom_sample_size: int = Field(default_factory=lambda: _env_int("GTA_AXIOM_SAMPLE_SIZE", 100), ge=1)
    associativity_triples: int = Field(default_factory=lambda: _env_int("GTA_ASSOCIATIVITY_TRIPLES", 200), ge=1)
    double_max_n: int = Field(default_factory=lambda: _env_int("GTA_DOUBLE_MAX_N", 4), ge=2)
    parallelism: int = Field(default_factory=lambda: _env_int("GTA_PARALLELISM", 1))
    log_level: str = Field(default_factory=lambda: os.getenv("GTA_LOG_LEVEL", "WARNING").upper())


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
