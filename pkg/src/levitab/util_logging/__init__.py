import json
import logging
import logging.config
import pathlib

DIRECTORY_OF_THIS_FILE = pathlib.Path(__file__).parent
FILENAME_LOGGING_JSON = DIRECTORY_OF_THIS_FILE / "util_logging_config.json"

ROOT_LOGGER = logging.getLogger()
logger = logging.getLogger(__file__)


def init_logging(verbose: bool = False) -> None:
    """
    Configure the root logger from the packaged json file.
    The handler writes to stderr: stdout carries the machine readable output.
    """
    logging.config.dictConfig(json.loads(FILENAME_LOGGING_JSON.read_text()))
    if verbose:
        for handler in ROOT_LOGGER.handlers:
            handler.setLevel(logging.DEBUG)
