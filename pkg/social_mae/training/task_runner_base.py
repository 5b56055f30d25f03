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
import math
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import torch
from torch import nn

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.logger.logger import Logger
from social_mae.metrics.eval_report import EvalReport
from social_mae.model.mae_stepper import MaeStepper
from social_mae.model.model_config import ModelConfig
from social_mae.scene.scene import Scene
from social_mae.token.scene_tokenizer import SceneTokenizer
from social_mae.training.task_sample import TaskSample
from social_mae.training.training_ex import TrainingDivergedError
from social_mae.utils.thread_cap import ThreadCap


#
# Types
#
ResultType = TypeVar("ResultType")


#
# Classes
#

# Generic task runner class: builds the model of a task, turns scenes into samples, computes losses and
# evaluates. Scene-level work may fan out to worker threads, results are kept in scene order.
class TaskRunnerBase(ABC):

    config: ConfigObject
    model_config: ModelConfig
    logger: Logger

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 model_config: ModelConfig,
                 logger: Logger) -> None:
        self.config = config
        self.model_config = model_config
        self.logger = logger

    # Get task
    @abstractmethod
    def Task(self) -> TaskTypes:
        pass

    # Build a freshly initialized model, a pure function of the seed
    @abstractmethod
    def BuildModel(self) -> nn.Module:
        pass

    # Convert a scene to a sample, raise TaskLabelError if the scene cannot serve the task
    @abstractmethod
    def PrepareSample(self,
                      scene: Scene,
                      scene_idx: int) -> TaskSample:
        pass

    # Mean loss over a batch of samples
    @abstractmethod
    def BatchLoss(self,
                  model: nn.Module,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> torch.Tensor:
        pass

    # Evaluate the task metrics over samples
    @abstractmethod
    def Evaluate(self,
                 model: nn.Module,
                 samples: Sequence[TaskSample]) -> EvalReport:
        pass

    # Get number of training epochs
    @abstractmethod
    def Epochs(self) -> int:
        pass

    # Get initial learning rate
    @abstractmethod
    def LearningRate(self) -> float:
        pass

    # Convert scenes to samples
    def PrepareSamples(self,
                       scenes: Sequence[Scene]) -> List[TaskSample]:
        return [self.PrepareSample(scene, i) for i, scene in enumerate(scenes)]

    # Build the optimizer stepper of a model
    def BuildStepper(self,
                     model: nn.Module) -> MaeStepper:
        return MaeStepper(model.parameters(),
                          self.LearningRate(),
                          self.Epochs(),
                          self.model_config.lr_decay_factor,
                          self.model_config.decay_at)

    # Run one optimizer step, return the loss before the update
    def TrainStep(self,
                  model: nn.Module,
                  stepper: MaeStepper,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> float:
        model.train()

        def loss_fct() -> torch.Tensor:
            loss = self.BatchLoss(model, batch, mask_seeds)
            if not math.isfinite(float(loss)):
                raise TrainingDivergedError(f"{self.Task().name.lower()} loss is not finite ({float(loss)})")
            return loss

        return float(stepper.Step(loss_fct))

    # Apply an inference function to every sample, without gradients, results in sample order
    def MapSamples(self,
                   model: nn.Module,
                   samples: Sequence[TaskSample],
                   fct: Callable[[nn.Module, TaskSample, int], ResultType]) -> List[ResultType]:
        model.eval()

        def run(idx: int) -> ResultType:
            # Gradient mode is per thread
            with torch.no_grad():
                return fct(model, samples[idx], idx)

        num_threads = ThreadCap.Get()
        if num_threads == 1:
            return [run(i) for i in range(len(samples))]
        with ThreadPoolExecutor(max_workers=num_threads) as executor:
            return list(executor.map(run, range(len(samples))))

    # Tokenize the history window of a scene
    def _TokenizeHistory(self,
                         scene: Scene) -> TaskSample:
        window = scene.Slice(0, min(scene.NumFrames(), self.model_config.history_frames))
        return TaskSample(scene, SceneTokenizer.Tokenize(window, self.model_config.history_frames))

    # Get seed
    def _Seed(self) -> int:
        return self.config.GetValue(ExperimentConfigTypes.SEED)
