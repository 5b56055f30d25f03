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

import os
from typing import Any, Dict

import torch

from social_mae.experiment.task_types import TaskTypes
from social_mae.model.model_config import ModelConfig
from social_mae.model.model_ex import ModelArgumentError
from social_mae.training.training_ex import CheckpointFormatError


#
# Classes
#

# Constants for checkpoint class
class CheckpointConst:
    # Magic string
    MAGIC: str = "SOCIALMAE"
    # Schema version
    SCHEMA_VERSION: int = 1
    # Required keys
    KEYS: tuple = ("magic", "schema_version", "task", "model_config", "config_text",
                   "state_dict", "stepper_state", "epoch", "step", "rng_state")


# Training checkpoint: model weights, optimizer state and the configuration that produced them
class Checkpoint:

    task: TaskTypes
    model_config: ModelConfig
    config_text: str
    state_dict: Dict[str, torch.Tensor]
    stepper_state: Dict[str, Any]
    epoch: int
    step: int
    rng_state: torch.Tensor

    # Constructor
    def __init__(self,
                 task: TaskTypes,
                 model_config: ModelConfig,
                 config_text: str,
                 state_dict: Dict[str, torch.Tensor],
                 stepper_state: Dict[str, Any],
                 epoch: int,
                 step: int,
                 rng_state: torch.Tensor) -> None:
        self.task = task
        self.model_config = model_config
        self.config_text = config_text
        self.state_dict = state_dict
        self.stepper_state = stepper_state
        self.epoch = epoch
        self.step = step
        self.rng_state = rng_state

    # Save to file
    def Save(self,
             path: str) -> None:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        torch.save({
            "magic": CheckpointConst.MAGIC,
            "schema_version": CheckpointConst.SCHEMA_VERSION,
            "task": self.task.name,
            "model_config": self.model_config.ToDict(),
            "config_text": self.config_text,
            "state_dict": self.state_dict,
            "stepper_state": self.stepper_state,
            "epoch": self.epoch,
            "step": self.step,
            "rng_state": self.rng_state,
        }, path)

    # Load from file
    @classmethod
    def Load(cls,
             path: str) -> Checkpoint:
        try:
            # Checkpoints carry optimizer state and plain dictionaries, not only tensors
            doc = torch.load(path, map_location="cpu", weights_only=False)
        except FileNotFoundError:
            raise
        except Exception as ex:
            raise CheckpointFormatError(f"File {path} is not a readable checkpoint") from ex

        if not isinstance(doc, dict) or doc.get("magic") != CheckpointConst.MAGIC:
            raise CheckpointFormatError(f"File {path} is not a checkpoint (bad magic)")
        if doc.get("schema_version") != CheckpointConst.SCHEMA_VERSION:
            raise CheckpointFormatError(
                f"Checkpoint {path} has schema version {doc.get('schema_version')}, "
                f"expected {CheckpointConst.SCHEMA_VERSION}"
            )
        missing = [k for k in CheckpointConst.KEYS if k not in doc]
        if missing:
            raise CheckpointFormatError(f"Checkpoint {path} misses fields: {', '.join(missing)}")

        try:
            task = TaskTypes[doc["task"]]
            model_config = ModelConfig.FromDict(doc["model_config"])
        except (KeyError, TypeError, ValueError, ModelArgumentError) as ex:
            raise CheckpointFormatError(f"Checkpoint {path} has an invalid task or model configuration") from ex

        return cls(task,
                   model_config,
                   doc["config_text"],
                   doc["state_dict"],
                   doc["stepper_state"],
                   doc["epoch"],
                   doc["step"],
                   doc["rng_state"])
