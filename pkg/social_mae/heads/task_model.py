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
from typing import Any, Dict

import torch
from torch import nn

from social_mae.experiment.task_types import TaskTypes
from social_mae.heads.action_head import ActionHead
from social_mae.heads.action_prediction import ActionPrediction
from social_mae.heads.forecast_head import ForecastHead
from social_mae.heads.forecast_output import ForecastOutput
from social_mae.heads.group_head import GroupHead
from social_mae.heads.group_prediction import GroupPrediction
from social_mae.heads.heads_ex import HeadArgumentError
from social_mae.model.latent_batch import LatentBatch
from social_mae.model.model_config import ModelConfig
from social_mae.model.token_tensors import TokenTensors
from social_mae.model.trajectory_encoder import TrajectoryEncoder
from social_mae.model.weight_init import WeightInit
from social_mae.token.scene_tokenizer import TokenizedScene


#
# Classes
#

# Constants for task model class
class TaskModelConst:
    # Task to head class
    TASK_TO_HEAD: Dict[TaskTypes, Any] = {
        TaskTypes.FORECAST: ForecastHead,
        TaskTypes.GROUP: GroupHead,
        TaskTypes.ACTION: ActionHead,
    }
    # State dict prefix of encoder parameters
    ENCODER_PREFIX: str = "encoder."


# Encoder with a task head in place of the reconstruction decoder.
# The encoder sees the full, unmasked token set.
class TaskModel(nn.Module):

    config: ModelConfig
    task: TaskTypes
    encoder: TrajectoryEncoder
    head: nn.Module

    # Constructor
    def __init__(self,
                 config: ModelConfig,
                 task: TaskTypes) -> None:
        super().__init__()
        if task not in TaskModelConst.TASK_TO_HEAD:
            raise HeadArgumentError(f"Task {task.name.lower()} has no fine-tuning head")
        self.config = config
        self.task = task
        self.encoder = TrajectoryEncoder(config)
        self.head = TaskModelConst.TASK_TO_HEAD[task](config)
        self.apply(WeightInit.Apply)

    # Encode all tokens of a scene
    def Encode(self,
               sample: TokenizedScene) -> LatentBatch:
        dtype = self.encoder.content_proj.weight.dtype
        return LatentBatch(self.encoder(TokenTensors.FromBatch(sample.tokens, dtype)), sample.tokens)

    # Forecast the future window
    def Forecast(self,
                 sample: TokenizedScene) -> ForecastOutput:
        self.__CheckTask(TaskTypes.FORECAST)
        return self.head(self.Encode(sample), sample.centered, self.config.future_frames)

    # Predict groups
    def Group(self,
              sample: TokenizedScene) -> GroupPrediction:
        self.__CheckTask(TaskTypes.GROUP)
        return self.head(self.Encode(sample), sample.scene)

    # Predict actions of all persons (padding included)
    def Actions(self,
                sample: TokenizedScene) -> ActionPrediction:
        self.__CheckTask(TaskTypes.ACTION)
        return self.head(self.Encode(sample).PoolPersons(sample.scene.NumPersons()))

    # Load encoder weights from a pre-training state dict, decoder entries are discarded
    def LoadEncoder(self,
                    state_dict: Dict[str, torch.Tensor]) -> None:
        prefix = TaskModelConst.ENCODER_PREFIX
        encoder_state = {k[len(prefix):]: v for k, v in state_dict.items() if k.startswith(prefix)}
        self.encoder.load_state_dict(encoder_state, strict=True)

    # Check task
    def __CheckTask(self,
                    task: TaskTypes) -> None:
        if self.task != task:
            raise HeadArgumentError(f"Model was built for task {self.task.name.lower()}, not {task.name.lower()}")
