import logging
import pytest
import dupy as dp
from dupy.introspection import (available_loggers, get_logger,
                                shows_progress, verbosity_level)


@pytest.mark.parametrize(
        "count,level",
        [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG),
         (5, logging.DEBUG)])
def test_verbosity_level(count, level):
    assert verbosity_level(count) == level


def test_get_logger():
    logger = get_logger('center', 'debug')
    assert logger.name == 'dupy.center'
    assert logger.level == logging.DEBUG
    again = get_logger('dupy.center', logging.INFO)
    assert again is logger
    assert len(logger.handlers) == 1
    assert shows_progress(logger)
    logger.setLevel(logging.WARNING)
    assert not shows_progress(logger)
    logger.handlers = []
    logger.setLevel(logging.NOTSET)


def test_available_loggers():
    names = available_loggers()
    assert 'center' in names
    assert 'isomorphism' in names
    assert dp.center.LOG.name == 'dupy.center'
