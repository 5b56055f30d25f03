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
from abc import ABC, abstractmethod
from typing import Any

from social_mae.config.config_object import ConfigObject
from social_mae.harness.experiment_pipeline import ExperimentPipeline
from social_mae.logger.logger import Logger


#
# Classes
#

#
# Generic command base class
#
class CommandBase(ABC):

    config: ConfigObject
    logger: Logger

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 logger: Logger) -> None:
        self.config = config
        self.logger = logger

    # Execute command
    def Execute(self,
                **kwargs: Any) -> Any:
        self.logger.GetLogger().info(f"Executing command {self.__class__.__name__}")
        try:
            return self._ExecuteCommand(**kwargs)
        except Exception:
            self.logger.GetLogger().exception(f"An error occurred while executing command {self.__class__.__name__}")
            raise

    # Create the experiment pipeline
    def _Pipeline(self) -> ExperimentPipeline:
        return ExperimentPipeline(self.config, self.logger)

    # Execute command (to be implemented by children classes)
    @abstractmethod
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        pass
