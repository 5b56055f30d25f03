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
import torch
from torch import nn

from social_mae.heads.task_model import TaskModel
from social_mae.training.task_runner_base import TaskRunnerBase


#
# Classes
#

# Generic fine-tuning runner class: encoder plus one task head, trained end-to-end
class FinetuneRunnerBase(TaskRunnerBase):
    # Build model
    def BuildModel(self) -> nn.Module:
        torch.manual_seed(self._Seed())
        return TaskModel(self.model_config, self.Task())

    # Get number of epochs
    def Epochs(self) -> int:
        return self.model_config.finetune_epochs

    # Get learning rate
    def LearningRate(self) -> float:
        return self.model_config.finetune_lr
