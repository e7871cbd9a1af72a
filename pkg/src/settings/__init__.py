from typing import List

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from .design_pattern import singleton

load_dotenv()


@singleton
class AppSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="STIA_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    APP_NAME: str = "STIA Broadcast Channel Simulator"
    APP_VERSION: str = "1.0.0"
    API_V1_PREFIX: str = "/api"
    ALLOWED_ORIGINS: List[str] = ["*"]

    # Fading
    H_MIN: float = 1e-3
    H_MAX: float = 1e3
    REJECTION_RETRY_CAP: int = 1000

    # Precoding
    COND_THRESHOLD: float = 1e8
    RESAMPLE_CAP: int = 100
    ALIGNMENT_TOL: float = 1e-9
    DECODE_TOL: float = 1e-8

    # Monte-Carlo
    SNR_GRID_DB: List[float] = [40.0, 50.0, 60.0, 70.0, 80.0]
    TRIALS: int = 1000
    SEED: int = 0
    MAX_WORKERS: int = 1
    MAX_API_TRIALS: int = 2000

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = "logs"
    LOG_TO_FILE: bool = True


APP_SETTINGS = AppSettings()
