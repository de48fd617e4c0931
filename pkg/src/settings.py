from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    MAX_ALGEBRA_DIM: int = Field(4096, description="Largest materialized tensor product dimension")
    MAX_MULTILINEAR_DEGREE: int = Field(7, description="Size guard for P_n computations")
    MAX_BRUTE_TUPLES: int = Field(10**9, description="Guard on |basis|^n for exhaustive tuple evaluation")
    EXACT_RANK_MAX_DEGREE: int = Field(6, description="Largest n whose proper dimension is taken from an elimination")
    VALIDATION_EXHAUSTIVE_DIM: int = Field(64, description="Algebras up to this dimension are validated on all basis triples")
    VALIDATION_SAMPLES: int = Field(10_000, description="Random triples checked above the exhaustive dimension")
    DEFAULT_SEED: int = Field(20240229, ge=0)
    THREADS: int = Field(1, ge=1)
    LOGGING_CONFIG: Path = Field(Path(__file__).resolve().parent.parent / "logging.yaml")


@lru_cache
def get_settings() -> Settings:
    return Settings()  # type: ignore
