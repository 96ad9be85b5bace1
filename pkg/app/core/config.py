import os
from enum import Enum
from typing import Any

from pydantic import AnyHttpUrl, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Get the path of the directory containing the current script (config.py)
current_dir = os.path.dirname(os.path.abspath(__file__))

# Navigate two directories up to reach the project root directory
project_root = os.path.dirname(os.path.dirname(current_dir))


class ModeEnum(str, Enum):
    development = "development"
    production = "production"
    testing = "testing"


class Settings(BaseSettings):
    MODE: ModeEnum = ModeEnum.development
    API_VERSION: str = "v1"
    API_V1_STR: str = f"/api/{API_VERSION}"
    PROJECT_NAME: str = "moon-pipedreams"
    LOG_CONFIG: str = os.path.join(project_root, "logging.ini")
    LOG_LEVEL: str = "INFO"

    # Tractability guards; every engine call and CLI flag may override them.
    MAX_LENGTH: int = 16
    MAX_SN: int = 5
    MAX_SN_HARD: int = 6
    MAX_SHAPE_BOX: int = 6
    PROPERTY_BOX: int = 5
    BRUTE_FORCE_MAX_N: int = 6
    SCHUBERT_ORACLE_MAX_N: int = 6
    SAMPLE_SEED: int = 2024

    BACKEND_CORS_ORIGINS: list[str] | list[AnyHttpUrl] = []

    @field_validator("BACKEND_CORS_ORIGINS", mode="before")
    def assemble_cors_origins(cls, v: str | list[str]) -> list[str] | str:
        if isinstance(v, str) and not v.startswith("["):
            return [i.strip() for i in v.split(",") if i.strip()]
        elif isinstance(v, (list, str)):
            return v
        raise ValueError(v)

    @field_validator("MAX_SN", "MAX_SHAPE_BOX", "PROPERTY_BOX", mode="after")
    def positive_guard(cls, v: int) -> Any:
        if v < 1:
            raise ValueError("guards must be positive")
        return v

    model_config = SettingsConfigDict(
        case_sensitive=True, env_file=os.path.join(project_root, ".env")
    )


settings = Settings()
