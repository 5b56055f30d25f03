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
from typing import Any

from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.harness.ablation_sweep import AblationSweep
from social_mae.harness.command_base import CommandBase
from social_mae.harness.harness_ex import HarnessArgumentError


#
# Classes
#

#
# Command for synthesizing (or verifying) a dataset
#
class SynthCmd(CommandBase):
    # Execute command
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        return self._Pipeline().Synth(verify=kwargs.get("verify", False))


#
# Command for pre-training
#
class PretrainCmd(CommandBase):
    # Execute command
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        return self._Pipeline().Pretrain(resume=kwargs.get("resume"))


#
# Command for fine-tuning a task
#
class FinetuneCmd(CommandBase):
    # Execute command
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        if kwargs.get("from_scratch", False) and kwargs.get("checkpoint") is not None:
            raise HarnessArgumentError("Options --checkpoint and --from-scratch are mutually exclusive")
        return self._Pipeline().Finetune(checkpoint=kwargs.get("checkpoint"),
                                         from_scratch=kwargs.get("from_scratch", False),
                                         resume=kwargs.get("resume"))


#
# Command for evaluating a checkpoint
#
class EvalCmd(CommandBase):
    # Execute command
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        checkpoint = kwargs.get("checkpoint")
        if checkpoint is None:
            raise HarnessArgumentError("Evaluation needs a checkpoint (--checkpoint)")
        return self._Pipeline().Evaluate(checkpoint)


#
# Command for running an ablation sweep
#
class AblateCmd(CommandBase):
    # Execute command
    def _ExecuteCommand(self,
                        **kwargs: Any) -> Any:
        axis = kwargs.get("axis") or self.config.GetValue(ExperimentConfigTypes.ABLATION_AXIS)
        values = kwargs.get("values")
        if values is None:
            values = self.config.GetValue(ExperimentConfigTypes.ABLATION_VALUES)
        if axis is None:
            raise HarnessArgumentError("Ablation needs an axis (--axis or ablation_axis)")
        return AblationSweep(self.config, self.logger).Run(axis, values)
