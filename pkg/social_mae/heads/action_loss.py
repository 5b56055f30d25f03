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
from torch.nn import functional as F

from social_mae.heads.action_prediction import ActionPrediction
from social_mae.heads.heads_ex import HeadArgumentError


#
# Classes
#

# Action loss class: lambda_pose * cross-entropy(pose) + lambda_interaction * mean BCE(interactions)
class ActionLoss:
    # Compute loss over the given persons
    @staticmethod
    def Compute(pred: ActionPrediction,
                pose_labels: np.ndarray,
                interaction_labels: np.ndarray,
                lambda_pose: float = 1.0,
                lambda_interaction: float = 1.0) -> torch.Tensor:
        num_pose = pred.pose_logits.shape[-1]
        pose_labels = np.asarray(pose_labels, dtype=np.int64)
        interaction_labels = np.asarray(interaction_labels, dtype=np.float64)
        if pose_labels.shape != (pred.pose_logits.shape[0],):
            raise HeadArgumentError(f"Pose labels shape {pose_labels.shape} does not match the predictions")
        if np.any(pose_labels < 0) or np.any(pose_labels >= num_pose):
            raise HeadArgumentError(f"Pose labels out of range [0, {num_pose})")
        if interaction_labels.shape != tuple(pred.interaction_logits.shape):
            raise HeadArgumentError(
                f"Interaction labels shape {interaction_labels.shape} does not match "
                f"{tuple(pred.interaction_logits.shape)}"
            )
        if not np.all((interaction_labels == 0) | (interaction_labels == 1)):
            raise HeadArgumentError("Interaction labels shall be 0/1")

        pose_loss = F.cross_entropy(pred.pose_logits, torch.as_tensor(pose_labels))
        interaction_loss = F.binary_cross_entropy_with_logits(
            pred.interaction_logits,
            torch.as_tensor(interaction_labels, dtype=pred.interaction_logits.dtype)
        )
        return lambda_pose * pose_loss + lambda_interaction * interaction_loss
