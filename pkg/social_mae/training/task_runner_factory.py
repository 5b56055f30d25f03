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
from typing import Dict, Type

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.task_types import TaskTypes
from social_mae.logger.logger import Logger
from social_mae.model.model_config import ModelConfig
from social_mae.training.action_runner import ActionRunner
from social_mae.training.forecast_runner import ForecastRunner
from social_mae.training.group_runner import GroupRunner
from social_mae.training.pretrain_runner import PretrainRunner
from social_mae.training.task_runner_base import TaskRunnerBase


#
# Classes
#

# Constants for task runner factory class
class TaskRunnerFactoryConst:
    # Task to runner class
    TASK_TO_RUNNER: Dict[TaskTypes, Type[TaskRunnerBase]] = {
        TaskTypes.PRETRAIN: PretrainRunner,
        TaskTypes.FORECAST: ForecastRunner,
        TaskTypes.GROUP: GroupRunner,
        TaskTypes.ACTION: ActionRunner,
    }


# Task runner factory class
class TaskRunnerFactory:
    # Create runner
    @staticmethod
    def CreateRunner(task: TaskTypes,
                     config: ConfigObject,
                     model_config: ModelConfig,
                     logger: Logger) -> TaskRunnerBase:
        return TaskRunnerFactoryConst.TASK_TO_RUNNER[task](config, model_config, logger)
