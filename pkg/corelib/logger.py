import logging
import logging.config
import pathlib
from typing import Optional

import orjson

from .config import Settings

DEFAULT_LOGGING_CONFIG = (
    pathlib.Path(__file__).resolve().parent.parent / 'logging-config.json'
)

_fallback_fmt = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
_fallback_datefmt = '[%Y-%m-%d %H:%M:%S %z]'


def load_logging_config(path: Optional[str | pathlib.Path] = None) -> Optional[dict]:
    path = pathlib.Path(path or DEFAULT_LOGGING_CONFIG)
    if not path.is_file():
        return None
    return orjson.loads(path.read_bytes())


def configure_logging(settings: Settings, verbose: bool = False):
    level = 'DEBUG' if verbose else settings.LOG_LEVEL.upper()
    config = load_logging_config(settings.LOGGING_CONFIG_FILE)
    if config is None:
        logging.basicConfig(level=level, format=_fallback_fmt, datefmt=_fallback_datefmt)
        return
    for logger_config in config.get('loggers', {}).values():
        logger_config['level'] = level
    logging.config.dictConfig(config)
