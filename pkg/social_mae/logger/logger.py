# Copyright (c) 2026 The social_mae developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.


#
# Imports
#
from __future__ import annotations

import logging
import logging.handlers
import os
from typing import Union

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes


#
# Classes
#

# Constants for logger class
class LoggerConst:
    # Logger name
    LOGGER_NAME: str = "social_mae"
    # Log formats
    LOG_CONSOLE_FORMAT: str = "%(asctime)-15s %(levelname)s - %(message)s"
    LOG_FILE_FORMAT: str = "%(asctime)-15s %(levelname)s - [%(name)s.%(funcName)s:%(lineno)d] %(message)s"


# Logger class
class Logger:

    config: ConfigObject
    logger: logging.Logger

    # Constructor
    def __init__(self,
                 config: ConfigObject) -> None:
        self.config = config
        self.logger = logging.getLogger(LoggerConst.LOGGER_NAME)
        self.__Init()

    # Create a logger that only writes warnings to console, for library use without a configuration file
    @classmethod
    def Quiet(cls) -> Logger:
        config = ConfigObject()
        config.SetValue(ExperimentConfigTypes.LOG_LEVEL, logging.WARNING)
        config.SetValue(ExperimentConfigTypes.LOG_CONSOLE_ENABLED, True)
        config.SetValue(ExperimentConfigTypes.LOG_FILE_ENABLED, False)
        return cls(config)

    # Get logger
    def GetLogger(self) -> logging.Logger:
        return self.logger

    # Initialize
    def __Init(self) -> None:
        # Handlers of a previous experiment in the same process are dropped
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()
        self.logger.propagate = False

        self.__ConfigureRootLogger()
        self.__ConfigureConsoleLogger()
        self.__ConfigureFileLogger()

        self.logger.debug("Logger initialized")

    # Configure root logger
    def __ConfigureRootLogger(self) -> None:
        self.logger.setLevel(self.config.GetValue(ExperimentConfigTypes.LOG_LEVEL))

    # Configure console logger
    def __ConfigureConsoleLogger(self) -> None:
        if self.config.GetValue(ExperimentConfigTypes.LOG_CONSOLE_ENABLED):
            ch = logging.StreamHandler()
            ch.setLevel(self.config.GetValue(ExperimentConfigTypes.LOG_LEVEL))
            ch.setFormatter(logging.Formatter(LoggerConst.LOG_CONSOLE_FORMAT))
            self.logger.addHandler(ch)

    # Configure file logger
    def __ConfigureFileLogger(self) -> None:
        if not self.config.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED):
            return

        # The log file always lives under the experiment output directory
        log_file_name = os.path.join(self.config.GetValue(ExperimentConfigTypes.OUTPUT_DIR),
                                     self.config.GetValue(ExperimentConfigTypes.LOG_FILE_NAME))
        os.makedirs(os.path.dirname(log_file_name), exist_ok=True)

        fh: Union[logging.handlers.RotatingFileHandler, logging.FileHandler]
        if self.config.GetValue(ExperimentConfigTypes.LOG_FILE_USE_ROTATING):
            fh = logging.handlers.RotatingFileHandler(
                log_file_name,
                maxBytes=self.config.GetValue(ExperimentConfigTypes.LOG_FILE_MAX_BYTES),
                backupCount=self.config.GetValue(ExperimentConfigTypes.LOG_FILE_BACKUP_CNT),
                encoding="utf-8"
            )
        else:
            fh = logging.FileHandler(log_file_name,
                                     mode="a" if self.config.GetValue(ExperimentConfigTypes.LOG_FILE_APPEND) else "w",
                                     encoding="utf-8")

        fh.setLevel(self.config.GetValue(ExperimentConfigTypes.LOG_LEVEL))
        fh.setFormatter(logging.Formatter(LoggerConst.LOG_FILE_FORMAT))
        self.logger.addHandler(fh)
