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
from typing import Any, Callable, Dict, Iterable

import torch
from torch.optim import Adam
from torch.optim.lr_scheduler import MultiStepLR

from social_mae.model.model_ex import ModelArgumentError


#
# Classes
#

# Optimizer stepper class.
# Adam with a single multiplicative learning-rate decay at a fraction of the total epochs, stepped per epoch.
class MaeStepper:

    optimizer: Adam
    scheduler: MultiStepLR
    decay_epoch: int

    # Constructor
    def __init__(self,
                 parameters: Iterable[torch.nn.Parameter],
                 lr: float,
                 epochs: int,
                 decay_factor: float,
                 decay_at: float) -> None:
        if epochs <= 0:
            raise ModelArgumentError(f"Number of epochs shall be positive, got {epochs}")
        self.decay_epoch = max(1, math.ceil(decay_at * epochs))
        self.optimizer = Adam(parameters, lr=lr)
        self.scheduler = MultiStepLR(self.optimizer, milestones=[self.decay_epoch], gamma=decay_factor)

    # Run one optimizer step on the loss returned by the closure, return the loss value
    def Step(self,
             loss_fct: Callable[[], torch.Tensor]) -> torch.Tensor:
        self.optimizer.zero_grad()
        loss = loss_fct()
        loss.backward()
        self.optimizer.step()
        return loss.detach()

    # Notify end of epoch
    def EndEpoch(self) -> None:
        self.scheduler.step()

    # Get current learning rate
    def LearningRate(self) -> float:
        return self.optimizer.param_groups[0]["lr"]

    # Get state
    def StateDict(self) -> Dict[str, Any]:
        return {
            "optimizer": self.optimizer.state_dict(),
            "scheduler": self.scheduler.state_dict(),
        }

    # Load state
    def LoadStateDict(self,
                      state: Dict[str, Any]) -> None:
        self.optimizer.load_state_dict(state["optimizer"])
        self.scheduler.load_state_dict(state["scheduler"])
