import logging
import sys

# Define the custom logging level SUCCESS (between INFO and WARNING)
SUCCESS_LEVEL_NUM = 25
logging.addLevelName(SUCCESS_LEVEL_NUM, "SUCCESS")


def success(self, message, *args, **kwargs):
    if self.isEnabledFor(SUCCESS_LEVEL_NUM):
        self._log(SUCCESS_LEVEL_NUM, message, args, **kwargs)

# Add the 'success' method to the Logger class
logging.Logger.success = success


def setup_logger(level=logging.INFO, stream=None):
    """
    Configures the root logger for a command-line run.

    Args:
        - level: The logging level (DEBUG in debug mode).
        - stream: Where records go, standard error by default.

    Returns:
        - The root logger.
    """
    logger = logging.getLogger()
    logger.setLevel(level)

    # Remove existing handlers
    if logger.hasHandlers():
        logger.handlers.clear()

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s - %(message)s'))
    logger.addHandler(handler)

    return logger


def get_logger(name: str, logger=None):
    """Returns the given logger, or the module logger when none was passed."""
    return logger if logger is not None else logging.getLogger(name)
