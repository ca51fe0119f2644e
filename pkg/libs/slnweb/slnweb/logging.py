"""
Logging for the slnweb library.

Modules log through `get_logger(<module>)`, i.e. children of the 'slnweb' logger.
That logger only carries a NullHandler, so nothing is printed unless an application
(the CLI's -v flag, or a caller of enable_debug_logging) attaches a stream handler.

Levels in use:
    INFO  - one line per CLI command (verb and engine settings)
    DEBUG - per DP step, per crossing expansion, per greedy placement
"""

import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

DEFAULT_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'

logger = logging.getLogger('slnweb')
logger.addHandler(logging.NullHandler())

_STREAM_HANDLER_ATTR = '_slnweb_stream'


def get_logger(name: str) -> logging.Logger:
    """
    Logger for one module of the package, e.g. get_logger('evaluation') -> 'slnweb.evaluation'.
    """
    return logging.getLogger(f'slnweb.{name}')


def _drop_stream_handlers():
    for handler in [h for h in logger.handlers if getattr(h, _STREAM_HANDLER_ATTR, False)]:
        logger.removeHandler(handler)


def enable_debug_logging(level: int = logging.DEBUG,
                         format_string: Optional[str] = None,
                         stream: Optional[TextIO] = None) -> logging.Handler:
    """
    Send slnweb log records at `level` and above to `stream` (stderr by default).

    Calling it again replaces the previous handler instead of stacking a second one.
    Returns the installed handler.
    """
    _drop_stream_handlers()
    handler = logging.StreamHandler(stream or sys.stderr)
    setattr(handler, _STREAM_HANDLER_ATTR, True)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(format_string or DEFAULT_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    return handler


def disable_debug_logging() -> None:
    """Remove the handler installed by enable_debug_logging and return to WARNING."""
    _drop_stream_handlers()
    logger.setLevel(logging.WARNING)


def verbosity_level(count: int) -> int:
    """Map the number of -v flags to a level: 0 WARNING, 1 INFO, 2+ DEBUG."""
    return [logging.WARNING, logging.INFO][count] if count < 2 else logging.DEBUG


@contextmanager
def debug_logging(level: int = logging.DEBUG, stream: Optional[TextIO] = None) -> Iterator[None]:
    """
    Enable logging for the duration of a block, then restore the previous level and handlers.

    Example:
        >>> with debug_logging():
        ...     ev(program)
    """
    previous_level, previous_handlers = logger.level, logger.handlers[:]
    enable_debug_logging(level, stream=stream)
    try:
        yield
    finally:
        logger.handlers = previous_handlers
        logger.setLevel(previous_level)
