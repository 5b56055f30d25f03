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
from typing import List, Sequence, Tuple

import numpy as np
import torch
from torch import nn

from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.harness.harness_ex import TaskLabelError
from social_mae.heads.action_loss import ActionLoss
from social_mae.heads.action_prediction import ActionPrediction
from social_mae.metrics.action_map import ActionMap
from social_mae.metrics.eval_report import EvalReport
from social_mae.scene.scene import Scene
from social_mae.training.finetune_runner_base import FinetuneRunnerBase
from social_mae.training.task_sample import TaskSample


#
# Classes
#

# Action detection runner (pose-based and interaction-based), real persons only
class ActionRunner(FinetuneRunnerBase):
    # Get task
    def Task(self) -> TaskTypes:
        return TaskTypes.ACTION

    # Prepare sample
    def PrepareSample(self,
                      scene: Scene,
                      scene_idx: int) -> TaskSample:
        if not scene.HasActions():
            raise TaskLabelError(f"Scene {scene_idx} has no action labels")
        assert scene.pose_actions is not None and scene.interaction_actions is not None
        if np.any(scene.pose_actions >= self.model_config.num_pose_actions):
            raise TaskLabelError(
                f"Scene {scene_idx} has pose labels out of range [0, {self.model_config.num_pose_actions})"
            )
        if scene.interaction_actions.shape[1] != self.model_config.num_interactions:
            raise TaskLabelError(
                f"Scene {scene_idx} has {scene.interaction_actions.shape[1]} interaction classes, "
                f"expected {self.model_config.num_interactions}"
            )
        return self._TokenizeHistory(scene)

    # Batch loss
    def BatchLoss(self,
                  model: nn.Module,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> torch.Tensor:
        losses: List[torch.Tensor] = []
        for sample in batch:
            scene = sample.tokenized.scene
            real = scene.RealPersons()
            assert scene.pose_actions is not None and scene.interaction_actions is not None
            losses.append(ActionLoss.Compute(ActionRunner.RealPrediction(model.Actions(sample.tokenized), real),
                                             scene.pose_actions[real],
                                             scene.interaction_actions[real],
                                             self.config.GetValue(ExperimentConfigTypes.ACTION_LAMBDA_POSE),
                                             self.config.GetValue(ExperimentConfigTypes.ACTION_LAMBDA_INTERACTION)))
        return torch.stack(losses).mean()

    # Evaluate per-class AP and mAP over all real persons of all scenes
    def Evaluate(self,
                 model: nn.Module,
                 samples: Sequence[TaskSample]) -> EvalReport:
        num_pose = self.model_config.num_pose_actions

        def predict(mdl: nn.Module,
                    sample: TaskSample,
                    idx: int) -> Tuple[np.ndarray, np.ndarray]:
            scene = sample.tokenized.scene
            real = scene.RealPersons()
            assert scene.pose_actions is not None and scene.interaction_actions is not None
            pred = ActionRunner.RealPrediction(mdl.Actions(sample.tokenized), real)
            targets = np.concatenate([np.eye(num_pose, dtype=bool)[scene.pose_actions[real]],
                                      scene.interaction_actions[real]], axis=1)
            return pred.Scores().detach().cpu().numpy().astype(np.float64), targets

        results = self.MapSamples(model, samples, predict)
        aps, mean_ap = ActionMap.Compute(np.concatenate([r[0] for r in results], axis=0),
                                         np.concatenate([r[1] for r in results], axis=0))

        report = EvalReport(self.Task(), len(samples))
        for c, ap in enumerate(aps):
            name = f"action_ap_pose{c}" if c < num_pose else f"action_ap_interaction{c - num_pose}"
            report.SetMetric(name, ap)
        report.SetMetric("action_map", mean_ap)

        self.logger.GetLogger().info(f"Actions over {len(samples)} scenes: mAP {report.Overall():.4f}")
        return report

    # Restrict a prediction to the given persons
    @staticmethod
    def RealPrediction(pred: ActionPrediction,
                       real: np.ndarray) -> ActionPrediction:
        idx = torch.as_tensor(real, dtype=torch.long)
        return ActionPrediction(pred.pose_logits.index_select(0, idx),
                                pred.interaction_logits.index_select(0, idx),
                                pred.threshold)
