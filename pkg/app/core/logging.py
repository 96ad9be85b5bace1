import logging
import logging.config
import os

from app.core.config import settings

_configured = False


def setup_logging(level: str | None = None) -> None:
    """Load logging.ini once and apply the configured level to the app tree."""
    global _configured
    if not _configured:
        if os.path.exists(settings.LOG_CONFIG):
            logging.config.fileConfig(
                settings.LOG_CONFIG, disable_existing_loggers=False
            )
        else:
            logging.basicConfig(level=logging.WARNING)
        _configured = True
    logging.getLogger("app").setLevel(level or settings.LOG_LEVEL)
