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
from typing import List

import torch
from torch import nn

from social_mae.heads.action_prediction import ActionPrediction
from social_mae.model.model_config import ModelConfig


#
# Classes
#

# Constants for action head class
class ActionHeadConst:
    # Hidden layer sizes of both MLPs
    HIDDEN_SIZES: List[int] = [256, 64]


# Social action head: pose MLP (one label per person) and interaction MLP (any number of labels)
class ActionHead(nn.Module):

    config: ModelConfig
    pose_mlp: nn.Sequential
    interaction_mlp: nn.Sequential

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.pose_mlp = ActionHead.__Mlp(config.enc_dim, config.num_pose_actions)
        self.interaction_mlp = ActionHead.__Mlp(config.enc_dim, config.num_interactions)

    # Forward on pooled person latents [N, enc_dim]
    def forward(self,
                pooled: torch.Tensor) -> ActionPrediction:
        return ActionPrediction(self.pose_mlp(pooled),
                                self.interaction_mlp(pooled),
                                self.config.action_threshold)

    # Build MLP
    @staticmethod
    def __Mlp(in_size: int,
              out_size: int) -> nn.Sequential:
        h1, h2 = ActionHeadConst.HIDDEN_SIZES
        return nn.Sequential(
            nn.Linear(in_size, h1),
            nn.ReLU(),
            nn.Linear(h1, h2),
            nn.ReLU(),
            nn.Linear(h2, out_size),
        )
