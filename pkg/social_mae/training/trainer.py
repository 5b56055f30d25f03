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
from typing import List, Optional, Sequence

import numpy as np
import torch
from torch import nn

from social_mae.config.config_object import ConfigObject
from social_mae.config.config_sections_writer import ConfigSectionsWriter
from social_mae.experiment.experiment_config import ExperimentConfig
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.logger.logger import Logger
from social_mae.model.mae_stepper import MaeStepper
from social_mae.training.checkpoint import Checkpoint
from social_mae.training.metrics_csv_log import MetricsCsvLog
from social_mae.training.scene_dataset import SceneDataset
from social_mae.training.task_runner_base import TaskRunnerBase
from social_mae.training.task_sample import TaskSample
from social_mae.training.training_ex import ConfigMismatchError
from social_mae.utils.utils import Utils


#
# Classes
#

# Constants for trainer class
class TrainerConst:
    # Checkpoint directory, relative to the output directory
    CHECKPOINT_DIR: str = "checkpoints"
    # Verbatim copy of the configuration next to the checkpoints
    CONFIG_FILE_NAME: str = "config.ini"
    # Effective configuration, command-line overrides and resolved paths included
    RUN_CONFIG_FILE_NAME: str = "run_config.ini"
    # File name formats
    EPOCH_CHECKPOINT_FORMAT: str = "{}_epoch_{:04d}.pt"
    LAST_CHECKPOINT_FORMAT: str = "{}_last.pt"
    METRICS_FILE_FORMAT: str = "{}_metrics.csv"


# Training result
class TrainResult:

    model: nn.Module
    checkpoint_path: str
    metrics_path: str
    losses: List[float]

    # Constructor
    def __init__(self,
                 model: nn.Module,
                 checkpoint_path: str,
                 metrics_path: str,
                 losses: List[float]) -> None:
        self.model = model
        self.checkpoint_path = checkpoint_path
        self.metrics_path = metrics_path
        self.losses = losses


# Epoch loop shared by pre-training and fine-tuning.
# Batch order and mask seeds are pure functions of (seed, epoch, scene index), so resuming from a checkpoint
# replays exactly the epochs an uninterrupted run would have done.
class Trainer:

    config: ConfigObject
    logger: Logger
    runner: TaskRunnerBase

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 logger: Logger,
                 runner: TaskRunnerBase) -> None:
        self.config = config
        self.logger = logger
        self.runner = runner

    # Train a model, optionally resuming from a checkpoint
    def Train(self,
              model: nn.Module,
              samples: Sequence[TaskSample],
              name: str,
              eval_samples: Optional[Sequence[TaskSample]] = None,
              resume: Optional[str] = None) -> TrainResult:
        if len(samples) == 0:
            raise ValueError("Training set is empty")

        seed = self.config.GetValue(ExperimentConfigTypes.SEED)
        batch_size = self.config.GetValue(ExperimentConfigTypes.BATCH_SIZE)
        eval_every = self.config.GetValue(ExperimentConfigTypes.EVAL_EVERY)
        checkpoint_every = self.config.GetValue(ExperimentConfigTypes.CHECKPOINT_EVERY)
        epochs = self.runner.Epochs()

        stepper = self.runner.BuildStepper(model)
        start_epoch, step = 0, 0
        if resume is not None:
            start_epoch, step = self.__Resume(resume, model, stepper)

        metrics_path = os.path.join(self.__OutputDir(), TrainerConst.METRICS_FILE_FORMAT.format(name))
        csv_log = MetricsCsvLog(metrics_path, append=resume is not None)
        if resume is not None:
            dropped = csv_log.Truncate(start_epoch)
            if dropped > 0:
                self.logger.GetLogger().info(f"Dropped {dropped} metric rows logged after epoch {start_epoch}")
        self.__SaveConfig()

        self.logger.GetLogger().info(
            f"Training {name} on {len(samples)} scenes, epochs {start_epoch + 1}..{epochs}, "
            f"batch size {batch_size}, lr {stepper.LearningRate():.3e}"
        )

        losses: List[float] = []
        checkpoint_path = ""
        for epoch in range(start_epoch, epochs):
            batch_losses = []
            for batch_idx in SceneDataset.Batches(len(samples), batch_size, seed, epoch):
                batch = [samples[i] for i in batch_idx]
                mask_seeds = [Utils.DeriveSeed(seed, epoch, i) for i in batch_idx]
                batch_losses.append(self.runner.TrainStep(model, stepper, batch, mask_seeds))
                step += 1
                self.logger.GetLogger().debug(f"Epoch {epoch + 1} step {step}: loss {batch_losses[-1]:.6f}")

            epoch_loss = float(np.mean(batch_losses))
            losses.append(epoch_loss)
            csv_log.Write(step, epoch + 1, "train", "loss", epoch_loss)
            self.logger.GetLogger().info(
                f"Epoch {epoch + 1}/{epochs}: loss {epoch_loss:.6f}, lr {stepper.LearningRate():.3e}"
            )
            stepper.EndEpoch()

            if eval_samples and eval_every > 0 and (epoch + 1) % eval_every == 0:
                report = self.runner.Evaluate(model, eval_samples)
                for metric, value in report.metrics.items():
                    csv_log.Write(step, epoch + 1, "eval", metric, value)

            if (epoch + 1) % checkpoint_every == 0 or epoch + 1 == epochs:
                checkpoint_path = self.__SaveCheckpoint(name, model, stepper, epoch + 1, step)

        if checkpoint_path == "":
            checkpoint_path = self.__SaveCheckpoint(name, model, stepper, max(start_epoch, epochs), step)
        return TrainResult(model, checkpoint_path, metrics_path, losses)

    # Get the checkpoint directory
    def CheckpointDir(self) -> str:
        return os.path.join(self.__OutputDir(), TrainerConst.CHECKPOINT_DIR)

    # Restore model, optimizer and RNG state, return (epoch, step) to continue from
    def __Resume(self,
                 path: str,
                 model: nn.Module,
                 stepper: MaeStepper) -> tuple:
        checkpoint = Checkpoint.Load(path)
        if checkpoint.task != self.runner.Task():
            raise ConfigMismatchError(
                f"Checkpoint {path} was trained for task {checkpoint.task.name.lower()}, "
                f"not {self.runner.Task().name.lower()}"
            )
        if checkpoint.model_config != self.runner.model_config:
            diff = [k for k, v in self.runner.model_config.ToDict().items()
                    if checkpoint.model_config.ToDict().get(k) != v]
            raise ConfigMismatchError(f"Checkpoint {path} model configuration differs in: {', '.join(diff)}")

        model.load_state_dict(checkpoint.state_dict)
        stepper.LoadStateDict(checkpoint.stepper_state)
        torch.set_rng_state(checkpoint.rng_state)
        self.logger.GetLogger().info(f"Resumed from {path} at epoch {checkpoint.epoch}, step {checkpoint.step}")
        return checkpoint.epoch, checkpoint.step

    # Save a checkpoint for the epoch and update the last one, return the epoch checkpoint path
    def __SaveCheckpoint(self,
                         name: str,
                         model: nn.Module,
                         stepper: MaeStepper,
                         epoch: int,
                         step: int) -> str:
        checkpoint = Checkpoint(self.runner.Task(),
                                self.runner.model_config,
                                self.config.GetRawText(),
                                {k: v.detach().clone() for k, v in model.state_dict().items()},
                                stepper.StateDict(),
                                epoch,
                                step,
                                torch.get_rng_state())
        path = os.path.join(self.CheckpointDir(), TrainerConst.EPOCH_CHECKPOINT_FORMAT.format(name, epoch))
        checkpoint.Save(path)
        checkpoint.Save(os.path.join(self.CheckpointDir(), TrainerConst.LAST_CHECKPOINT_FORMAT.format(name)))
        self.logger.GetLogger().info(f"Checkpoint saved to {path}")
        return path

    # Store the configuration document verbatim and the effective configuration next to the checkpoints
    def __SaveConfig(self) -> None:
        os.makedirs(self.CheckpointDir(), exist_ok=True)
        with open(os.path.join(self.CheckpointDir(), TrainerConst.CONFIG_FILE_NAME), "w", encoding="utf-8") as fout:
            fout.write(self.config.GetRawText())
        ConfigSectionsWriter.Save(os.path.join(self.CheckpointDir(), TrainerConst.RUN_CONFIG_FILE_NAME),
                                  self.config,
                                  ExperimentConfig)

    # Get output directory
    def __OutputDir(self) -> str:
        return self.config.GetValue(ExperimentConfigTypes.OUTPUT_DIR)
