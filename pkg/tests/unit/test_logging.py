"""Tests for package logging."""

import logging

from cantor_besicovitch.utils.logging import ROOT_LOGGER, cell_logger, get_logger, setup_logging


class TestSetupLogging:
    def test_file_receives_debug(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        logger = setup_logging("WARNING", log_file)
        try:
            get_logger(f"{ROOT_LOGGER}.counting").debug("swept 16 cells")
            for handler in logger.handlers:
                handler.flush()
            assert "swept 16 cells" in log_file.read_text()
            assert logger.level == logging.DEBUG
        finally:
            for handler in list(logger.handlers):
                handler.close()
            logger.handlers.clear()

    def test_unknown_level_falls_back(self):
        logger = setup_logging("chatty")
        try:
            assert logger.level == logging.INFO
        finally:
            logger.handlers.clear()


class TestCellLogger:
    def test_prefix(self, caplog):
        log = cell_logger(get_logger(f"{ROOT_LOGGER}.ensemble"), n=3, theta=0.25)
        with caplog.at_level(logging.INFO, logger=ROOT_LOGGER):
            log.info("double sum ready")
        assert "[n=3 theta=0.25] double sum ready" in caplog.text
