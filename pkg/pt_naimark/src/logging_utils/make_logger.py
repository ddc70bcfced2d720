import logging
import sys

import colorlog

LOGGER_NAME = 'pt_naimark'
LOG_FORMAT = '%(log_color)s[%(filename)s:%(lineno)s:%(funcName)s] %(levelname)s: %(message)s'
LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}


def make_logger(name=LOGGER_NAME, level=logging.INFO, stream=None):
    """Configure the package logger with a single coloured handler.

    ``stream`` defaults to the current ``sys.stderr``; stdout is reserved for
    the documents the CLI emits. ``level`` may be a number or a level name.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())

    handler = colorlog.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT, log_colors=LOG_COLORS, reset=True))

    logger = colorlog.getLogger(name)
    logger.handlers.clear()
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def get_logger():
    return logging.getLogger(LOGGER_NAME)


def reset_logging():
    """Drop every handler and hand records back to the root logger (for tests)."""
    logger = get_logger()
    logger.handlers.clear()
    logger.propagate = True
    logger.setLevel(logging.NOTSET)

    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    logging.basicConfig(level=logging.ERROR)
