import logging
import sys
from typing import List, Union

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

Level = Union[int, str]


def verbosity_level(count: int) -> int:
    """ Log level for a repeated -v flag: WARNING, INFO, then DEBUG """
    if count <= 0:
        return logging.WARNING
    return logging.INFO if count == 1 else logging.DEBUG


def get_logger(name: str, level: Level = logging.INFO) -> logging.Logger:
    """ Route the dupy logger `name` to stdout at `level`

    Args:
        name: The module name, with or without the leading "dupy.";
            "dupy" itself configures the whole package.
        level: A level number or name such as 'DEBUG'.
    Returns:
        The configured logger. Earlier handlers are replaced, so
        repeated calls do not duplicate output.
    """
    if name != 'dupy' and not name.startswith('dupy.'):
        name = 'dupy.' + name
    if isinstance(level, str):
        level = level.upper()
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.handlers = []
    handler = logging.StreamHandler(sys.stdout)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(handler)
    return logger


def shows_progress(logger: logging.Logger) -> bool:
    """ Progress bars are drawn when the logger would emit INFO """
    return logger.isEnabledFor(logging.INFO)


def available_loggers() -> List[str]:
    """ Module names of the dupy loggers created so far """
    existing = logging.root.manager.loggerDict.keys()
    return sorted(k.split('.', 1)[1] for k in existing
                  if k.startswith('dupy.'))
