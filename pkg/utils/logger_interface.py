"""
Module
------

    logger_interface.py

Description
-----------

    This module contains wrapper methods for the Python logging
    package; each logger level is written to standard out with its
    own colour format.

Classes
-------

    Logger(caller_name=None)

        This is the base-class for all Python logging instances.

    LevelFormatter(colors_dict, log_format, date_format)

        This is the logging Formatter sub-class which selects the
        colour format according to the record logger level.

Author(s)
---------

    Henry R. Winterbottom; 09 February 2022

History
-------

    2023-02-09: Henry Winterbottom -- Initial implementation.

    2024-03-02: Henry Winterbottom -- Replaced the per-message
                logging reload with a single shared handler such that
                sweep worker threads may log concurrently; added the
                QLAB_LOGLEVEL environment threshold.

"""

# ----

# pylint: disable=missing-function-docstring

# ----

import logging
import os
import sys
import threading
from typing import Dict, Generic

# ----

# Define all available module properties.
__all__ = ["Logger"]

# ----

# Logger name under which all package loggers are registered.
ROOT_NAME = "qlab"

# Custom logger level used for application status messages.
STATUS = logging.INFO + 5
logging.addLevelName(STATUS, "STATUS")

_HANDLER_LOCK = threading.Lock()

# ----


class LevelFormatter(logging.Formatter):
    """
    Description
    -----------

    This is the logging Formatter sub-class which selects the colour
    format according to the record logger level.

    Parameters
    ----------

    colors_dict: ``Dict``

        A Python dictionary containing the ANSI colour prefix for each
        supported logger level.

    log_format: ``str``

        A Python string specifying the logger message format.

    date_format: ``str``

        A Python string specifying the logger timestamp format.

    """

    def __init__(self: Generic, colors_dict: Dict, log_format: str, date_format: str):
        """
        Description
        -----------

        Creates a new LevelFormatter object.

        """

        # Define the base-class attributes.
        super().__init__(fmt=log_format, datefmt=date_format)
        self.colors_dict = colors_dict

    def format(self: Generic, record: logging.LogRecord) -> str:
        color = self.colors_dict.get(record.levelname, self.colors_dict["RESET"])
        return color + super().format(record) + self.colors_dict["RESET"]


# ----


class Logger:
    """
    Description
    -----------

    This is the base-class object for all logger-type messages.

    Keywords
    --------

    caller_name: ``str``

        A Python string usually designating the caller instance name
        to appended to the message string (`msg`); if NoneType upon
        entry the `msg` is not modified.

    """

    def __init__(self: Generic, caller_name: str = None):
        """
        Description
        -----------

        Creates a new Logger object.

        """

        # Define the base-class attributes.
        self.log_format = "%(asctime)s :: %(levelname)s :: %(message)s"
        self.date_format = "%Y-%m-%d %H:%M:%S"
        self.stream = sys.stdout
        self.caller_name = caller_name

        # Define the logger object format string colors; note that all
        # supported base-class logger level types must be defined
        # here.
        self.colors_dict = {
            "CRITICAL": "\x1b[1;41m",
            "DEBUG": "\x1b[38;5;46m",
            "INFO": "\x1b[37;21m",
            "ERROR": "\x1b[1;41m",
            "WARNING": "\x1b[38;5;226m",
            "RESET": "\x1b[0m",
            "STATUS": "\033[1;36m",
        }
        self.logger = self.build()

    def build(self: Generic) -> logging.Logger:
        """
        Description
        -----------

        This method defines the package root logger handler (once)
        and returns the logger object for the caller.

        Returns
        -------

        logger: ``logging.Logger``

            A Python logging.Logger object for the caller.

        """

        # Attach the standard out handler to the package root logger;
        # this is done only once per process.
        root = logging.getLogger(ROOT_NAME)
        with _HANDLER_LOCK:
            if not any(item.get_name() == ROOT_NAME for item in root.handlers):
                handler = logging.StreamHandler(stream=self.stream)
                handler.set_name(ROOT_NAME)
                handler.setFormatter(
                    LevelFormatter(
                        colors_dict=self.colors_dict,
                        log_format=self.log_format,
                        date_format=self.date_format,
                    )
                )
                root.addHandler(handler)
                root.propagate = False
            root.setLevel(self.level(loglev=os.environ.get("QLAB_LOGLEVEL", "info")))

        # Define the logger object for the caller.
        logger = root.getChild(self.caller_name) if self.caller_name else root

        return logger

    def level(self: Generic, loglev: str) -> int:
        """
        Description
        -----------

        This method defines the logging level object.

        Parameters
        ----------

        loglev: ``str``

            A Python string defining the logger level; case
            insensitive.

        Returns
        -------

        level: ``int``

            A Python integer corresponding to the respective logger
            level `loglev`.

        """

        # Check that the logger level type is supported.
        if loglev.upper() not in self.colors_dict or loglev.upper() == "RESET":
            msg = f"Logger level {loglev.upper()} not supported. Aborting!!!"
            self.stream.write(
                (self.colors_dict["ERROR"] + msg + self.colors_dict["RESET"])
            )
            raise KeyError(msg)

        # Define the logging level object.
        level = logging.getLevelName(loglev.upper())

        return level

    def write(self: Generic, loglev: str, msg: str = None) -> None:
        """
        Description
        -----------

        This method writes the logger message in accordance with the
        logging level specified upon entry.

        Parameters
        ----------

        loglev: ``str``

            A Python string defining the logger level; case
            insensitive.

        msg: ``str``

            A Python string containing a message to accompany the
            logging level.

        """

        # Write the respective logger level message.
        if self.caller_name is not None:
            msg = f"{self.caller_name}: " + msg
        self.logger.log(self.level(loglev=loglev), msg)

    # The base-class logger CRITICAL level interface.
    def critical(self: Generic, msg: str) -> None:
        self.write(loglev="critical", msg=msg)

    # The base-class logger DEBUG level interface.
    def debug(self: Generic, msg: str) -> None:
        self.write(loglev="debug", msg=msg)

    # The base-class logger ERROR level interface.
    def error(self: Generic, msg: str) -> None:
        self.write(loglev="error", msg=msg)

    # The base-class logger INFO level interface.
    def info(self: Generic, msg: str) -> None:
        self.write(loglev="info", msg=msg)

    # The base-class logger STATUS level interface.
    def status(self: Generic, msg: str) -> None:
        self.write(loglev="status", msg=msg)

    # The base-class logger WARNING level interface.
    def warn(self: Generic, msg: str) -> None:
        self.write(loglev="warning", msg=msg)
