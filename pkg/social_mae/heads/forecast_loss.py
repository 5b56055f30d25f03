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
from typing import Optional, Sequence

import numpy as np
import torch

from social_mae.heads.forecast_output import ForecastOutput
from social_mae.heads.heads_ex import HeadArgumentError, HeadDegenerateError


#
# Classes
#

# Forecasting loss class.
# Sum over layers of weight * mean squared Euclidean error over visible future (person, joint, frame) entries.
class ForecastLoss:
    # Compute loss
    @staticmethod
    def Compute(out: ForecastOutput,
                gt_future: np.ndarray,
                visibility: np.ndarray,
                weights: Optional[Sequence[float]] = None) -> torch.Tensor:
        preds = out.predictions
        if tuple(preds.shape[1:]) != gt_future.shape or visibility.shape != gt_future.shape[:3]:
            raise HeadArgumentError(
                f"Prediction shape {tuple(preds.shape[1:])} does not match ground truth {gt_future.shape} "
                f"and visibility {visibility.shape}"
            )
        num_layers = out.NumLayers()
        layer_weights = list(weights) if weights is not None else [1.0] * num_layers
        if len(layer_weights) != num_layers:
            raise HeadArgumentError(f"Got {len(layer_weights)} layer weights for {num_layers} layers")

        count = float(visibility.sum())
        if count == 0:
            raise HeadDegenerateError("Future ground truth has no visible entry")

        gt_t = torch.as_tensor(gt_future, dtype=preds.dtype)
        vis_t = torch.as_tensor(visibility, dtype=preds.dtype)
        per_layer = (((preds - gt_t[None]) ** 2).sum(dim=-1) * vis_t[None]).sum(dim=(1, 2, 3)) / count
        return (torch.as_tensor(layer_weights, dtype=preds.dtype) * per_layer).sum()
