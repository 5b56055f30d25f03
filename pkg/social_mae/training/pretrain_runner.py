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
from typing import Sequence

import numpy as np
import torch
from torch import nn

from social_mae.experiment.task_types import TaskTypes
from social_mae.metrics.eval_report import EvalReport
from social_mae.model.pretrain_step import PretrainStep
from social_mae.model.reconstruction_loss import ReconstructionLoss
from social_mae.model.social_mae_model import SocialMae
from social_mae.scene.scene import Scene
from social_mae.token.tube_mask_sampler import TubeMaskSampler
from social_mae.training.task_runner_base import TaskRunnerBase
from social_mae.training.task_sample import TaskSample
from social_mae.utils.utils import Utils


#
# Classes
#

# Constants for pre-training runner class
class PretrainRunnerConst:
    # Seed key separating evaluation masks from training masks
    EVAL_SEED_KEY: int = 0x5EED


# Masked reconstruction pre-training runner
class PretrainRunner(TaskRunnerBase):
    # Get task
    def Task(self) -> TaskTypes:
        return TaskTypes.PRETRAIN

    # Build model
    def BuildModel(self) -> nn.Module:
        torch.manual_seed(self._Seed())
        return SocialMae(self.model_config)

    # Prepare sample, only the first window of the scene is used
    def PrepareSample(self,
                      scene: Scene,
                      scene_idx: int) -> TaskSample:
        return self._TokenizeHistory(scene)

    # Batch loss
    def BatchLoss(self,
                  model: nn.Module,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> torch.Tensor:
        return PretrainStep.BatchLoss(model,
                                      [s.tokenized for s in batch],
                                      mask_seeds,
                                      self.model_config.loss_scope)

    # Evaluate the reconstruction error under a fixed mask per scene
    def Evaluate(self,
                 model: nn.Module,
                 samples: Sequence[TaskSample]) -> EvalReport:
        def scene_loss(mdl: nn.Module,
                       sample: TaskSample,
                       idx: int) -> float:
            tokens = sample.tokenized.tokens
            plan = TubeMaskSampler.Sample(tokens.NumTokens(),
                                          self.model_config.mask_ratio,
                                          Utils.DeriveSeed(self._Seed(), PretrainRunnerConst.EVAL_SEED_KEY, idx))
            pred = mdl(tokens, plan)
            return float(ReconstructionLoss.Compute(pred, sample.tokenized.centered, plan,
                                                    self.model_config.loss_scope))

        losses = self.MapSamples(model, samples, scene_loss)
        report = EvalReport(self.Task(), len(samples))
        report.SetMetric("reconstruction_mse", float(np.mean(losses)) if losses else None)
        self.logger.GetLogger().info(f"Reconstruction MSE over {len(samples)} scenes: {report.Overall():.6f}")
        return report

    # Get number of epochs
    def Epochs(self) -> int:
        return self.model_config.pretrain_epochs

    # Get learning rate
    def LearningRate(self) -> float:
        return self.model_config.pretrain_lr
