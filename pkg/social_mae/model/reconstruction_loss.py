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
import numpy as np
import torch

from social_mae.model.loss_scope_types import LossScopeTypes
from social_mae.model.model_ex import ModelArgumentError
from social_mae.scene.centered_scene import CenteredScene
from social_mae.token.mask_plan import MaskPlan


#
# Classes
#

# Reconstruction loss class.
# Mean squared error over the contributing (token, axis, visible frame) entries in Cartesian space.
# Ground truth comes from the centered scene, never from token content.
class ReconstructionLoss:
    # Compute loss
    @staticmethod
    def Compute(pred: torch.Tensor,
                centered: CenteredScene,
                plan: MaskPlan,
                scope: LossScopeTypes = LossScopeTypes.MASKED_ONLY) -> torch.Tensor:
        n, j, t, c = centered.scene.trajectories.shape
        if pred.shape != (n * j, c * t):
            raise ModelArgumentError(f"Prediction shape {tuple(pred.shape)} does not match {(n * j, c * t)}")
        if plan.num_tokens != n * j:
            raise ModelArgumentError(f"Mask plan is for {plan.num_tokens} tokens, scene has {n * j}")

        gt = np.transpose(centered.scene.trajectories, (0, 1, 3, 2)).reshape(n * j, c * t)
        weight = np.repeat(centered.scene.visibility.reshape(n * j, 1, t), c, axis=1).reshape(n * j, c * t)
        weight = weight.astype(np.float64)
        if scope == LossScopeTypes.MASKED_ONLY:
            weight = weight * plan.MaskedFlags()[:, None]

        count = weight.sum()
        if count == 0:
            return 0.0 * pred.sum()

        gt_t = torch.as_tensor(gt, dtype=pred.dtype)
        weight_t = torch.as_tensor(weight, dtype=pred.dtype)
        return (weight_t * (pred - gt_t) ** 2).sum() / float(count)
