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
from torch import nn

from social_mae.codec.dct_matrix import DctMatrix
from social_mae.heads.forecast_output import ForecastOutput
from social_mae.heads.heads_ex import HeadArgumentError
from social_mae.model.latent_batch import LatentBatch
from social_mae.model.model_config import ModelConfig
from social_mae.scene.centered_scene import CenteredScene


#
# Classes
#

# Pose forecasting head.
# One linear read-out shared by all encoder layers maps each token latent to the future-window
# DCT coefficients of its joint; they are inverse-transformed and de-centered with the person offset.
class ForecastHead(nn.Module):

    config: ModelConfig
    readout: nn.Linear

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.readout = nn.Linear(config.enc_dim, config.coord_dim * config.future_frames)

    # Forward
    def forward(self,
                latents: LatentBatch,
                centered: CenteredScene,
                horizon: int) -> ForecastOutput:
        if horizon <= 0:
            raise HeadArgumentError(f"Forecast horizon shall be positive, got {horizon}")
        if horizon != self.config.future_frames:
            raise HeadArgumentError(
                f"Forecast horizon {horizon} does not match the head window ({self.config.future_frames})"
            )

        n, j, _, c = centered.scene.trajectories.shape
        if not np.array_equal(latents.tokens.token_index, np.arange(n * j)):
            raise HeadArgumentError("Forecasting needs the latents of the full, unmasked token set")

        # Layers 1..L, the input embedding is not read out
        coeffs = self.readout(latents.layers[1:]).reshape(latents.NumLayers(), n, j, c, horizon)
        future = DctMatrix.InverseTorch(coeffs).permute(0, 1, 2, 4, 3)
        offsets = torch.as_tensor(centered.global_offsets, dtype=future.dtype)
        return ForecastOutput(future + offsets[None, :, None, None, :], horizon)
