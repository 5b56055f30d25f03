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
import os
from typing import Optional

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes


#
# Classes
#

# Constants for experiment paths class
class ExperimentPathsConst:
    # Sub-directories of the output directory
    EVAL_DIR: str = "eval"
    PLOTS_DIR: str = "plots"
    ABLATION_DIR: str = "ablation"


# Experiment paths class.
# Relative data directories are taken relative to the output directory.
class ExperimentPaths:
    # Make the output directory and the data directories absolute, in place
    @staticmethod
    def Resolve(config: ConfigObject) -> None:
        output_dir = os.path.abspath(config.GetValue(ExperimentConfigTypes.OUTPUT_DIR))
        config.SetValue(ExperimentConfigTypes.OUTPUT_DIR, output_dir)
        for config_type in (ExperimentConfigTypes.DATASET_DIR,
                            ExperimentConfigTypes.PRETRAIN_DATASET_DIR,
                            ExperimentConfigTypes.EVAL_DATASET_DIR):
            path = config.GetValue(config_type)
            if path is not None and not os.path.isabs(path):
                config.SetValue(config_type, os.path.join(output_dir, path))

    # Get the training set directory
    @staticmethod
    def TrainDir(config: ConfigObject) -> str:
        return config.GetValue(ExperimentConfigTypes.DATASET_DIR)

    # Get the pre-training corpus directory (the training set if not given)
    @staticmethod
    def PretrainDir(config: ConfigObject) -> str:
        return ExperimentPaths.__OrTrainDir(config, config.GetValue(ExperimentConfigTypes.PRETRAIN_DATASET_DIR))

    # Get the evaluation set directory (the training set if not given)
    @staticmethod
    def EvalDir(config: ConfigObject) -> str:
        return ExperimentPaths.__OrTrainDir(config, config.GetValue(ExperimentConfigTypes.EVAL_DATASET_DIR))

    # Get an output sub-path
    @staticmethod
    def Output(config: ConfigObject,
               *parts: str) -> str:
        return os.path.join(config.GetValue(ExperimentConfigTypes.OUTPUT_DIR), *parts)

    # Get the given directory or the training set one
    @staticmethod
    def __OrTrainDir(config: ConfigObject,
                     path: Optional[str]) -> str:
        return path if path is not None else ExperimentPaths.TrainDir(config)
