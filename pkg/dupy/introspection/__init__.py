from .logging import get_logger, available_loggers, shows_progress, \
    verbosity_level
