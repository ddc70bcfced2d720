# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import logging

from pt_naimark.src.logging_utils import get_logger, make_logger, reset_logging


def test_make_logger_writes_to_stderr(capsys):
    logger = make_logger(level=logging.DEBUG)
    assert logger is get_logger()
    assert not logger.propagate
    assert len(logger.handlers) == 1
    logger.info('building dilation')
    captured = capsys.readouterr()
    assert 'building dilation' in captured.err
    assert captured.out == ''


def test_make_logger_replaces_handlers():
    make_logger()
    logger = make_logger(level=logging.WARNING)
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING


def test_reset_logging():
    make_logger()
    reset_logging()
    logger = get_logger()
    assert logger.handlers == []
    assert logger.propagate


def test_make_logger_accepts_level_names(tmp_path):
    target = tmp_path / 'log.txt'
    with open(target, 'w') as stream:
        logger = make_logger(level='debug', stream=stream)
        logger.debug('residual below tolerance')
    assert logger.level == logging.DEBUG
    assert 'residual below tolerance' in target.read_text()
