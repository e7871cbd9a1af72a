"""
Logging Configuration
"""
import logging
import sys
from pathlib import Path

from src.settings import APP_SETTINGS


def setup_logger(name: str) -> logging.Logger:
    """Setup logger with console (stderr) and file handlers"""
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    # Console handler; stdout is reserved for CSV/JSON output
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(APP_SETTINGS.LOG_LEVEL)
    console_format = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    # File handler
    if APP_SETTINGS.LOG_TO_FILE:
        try:
            log_dir = Path(APP_SETTINGS.LOG_DIR)
            log_dir.mkdir(exist_ok=True)
            file_handler = logging.FileHandler(log_dir / f"{name}.log")
        except OSError:
            return logger
        file_handler.setLevel(logging.DEBUG)
        file_format = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
        )
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get or create logger"""
    return setup_logger(name)
