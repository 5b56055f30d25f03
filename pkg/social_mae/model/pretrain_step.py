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
from typing import List, Sequence

import torch

from social_mae.model.loss_scope_types import LossScopeTypes
from social_mae.model.mae_stepper import MaeStepper
from social_mae.model.reconstruction_loss import ReconstructionLoss
from social_mae.model.social_mae_model import SocialMae
from social_mae.token.scene_tokenizer import TokenizedScene
from social_mae.token.tube_mask_sampler import TubeMaskSampler
from social_mae.training.training_ex import TrainingDivergedError


#
# Classes
#

# Pre-training step class
class PretrainStep:
    # Reconstruction loss of a batch, averaged over scenes. One mask seed per scene.
    @staticmethod
    def BatchLoss(model: SocialMae,
                  batch: Sequence[TokenizedScene],
                  mask_seeds: Sequence[int],
                  scope: LossScopeTypes) -> torch.Tensor:
        losses: List[torch.Tensor] = []
        for sample, seed in zip(batch, mask_seeds):
            plan = TubeMaskSampler.Sample(sample.tokens.NumTokens(), model.config.mask_ratio, seed)
            pred = model(sample.tokens, plan)
            losses.append(ReconstructionLoss.Compute(pred, sample.centered, plan, scope))
        return torch.stack(losses).mean()

    # Run one optimizer step, return the loss before the update
    @staticmethod
    def Step(model: SocialMae,
             stepper: MaeStepper,
             batch: Sequence[TokenizedScene],
             mask_seeds: Sequence[int],
             scope: LossScopeTypes) -> float:
        if len(batch) == 0 or len(batch) != len(mask_seeds):
            raise ValueError("Batch shall be non-empty with one mask seed per scene")

        model.train()

        def loss_fct() -> torch.Tensor:
            loss = PretrainStep.BatchLoss(model, batch, mask_seeds, scope)
            if not math.isfinite(float(loss)):
                raise TrainingDivergedError(f"Reconstruction loss is not finite ({float(loss)})")
            return loss

        return float(stepper.Step(loss_fct))
