import functools
from typing import Optional

from pydantic import (
    AfterValidator,
    DirectoryPath,
    Field,
    FilePath,
    ValidationInfo,
    field_validator,
)
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing_extensions import Annotated

from .constants import Environments, ShardRunnerKind


class Settings(BaseSettings):
    PROJECT_NAME: str = 'avalanches'
    APP_ENV: Optional[Environments] = Environments.dev
    DEBUG: Optional[int] = None

    LOG_LEVEL: str = 'INFO'
    LOGGING_CONFIG_FILE: Optional[Annotated[FilePath, AfterValidator(str)]] = None

    # relative --output paths are resolved against this directory
    AVALANCHE_OUTPUT_DIR: Optional[Annotated[DirectoryPath, AfterValidator(str)]] = (
        None
    )

    TREE_CENSUS_MAX_VERTICES: int = Field(8, ge=2)
    URN_ENUMERATION_CAP: int = Field(10**7, ge=1)
    TOWER_ENUMERATION_CAP: int = Field(10**7, ge=1)
    GENERAL_PMF_MAX_COORDS: int = Field(10, ge=1)
    EXHAUSTIVE_PARTITION_MAX_COORDS: int = Field(6, ge=1)

    SIMULATION_CHUNK_SIZE: int = Field(100_000, ge=1)
    SHARD_RUNNER: ShardRunnerKind = ShardRunnerKind.local
    SHARD_WORKERS: Optional[int] = Field(None, ge=1)

    CSV_SIGNIFICANT_DIGITS: int = Field(17, ge=1, le=100)
    MIN_EXPECTED_COUNT: float = Field(5.0, gt=0)

    @field_validator('APP_ENV', mode='before')
    @classmethod
    def assemble_env(
        cls, v: Optional[str], info: ValidationInfo
    ) -> Optional[Environments]:  # noqa
        if v is None or isinstance(v, Environments):
            return v
        v = v.upper()
        try:
            return Environments(v)
        except ValueError:
            return Environments.prod

    @field_validator('DEBUG', mode='after')
    @classmethod
    def assemble_debug(cls, v: Optional[int], info: ValidationInfo) -> int:  # noqa
        if v is None:
            return info.data.get('APP_ENV', Environments.prod) == Environments.dev
        return v

    model_config = SettingsConfigDict(case_sensitive=True, validate_default=True)


@functools.cache
def get_settings() -> Settings:
    return Settings()
