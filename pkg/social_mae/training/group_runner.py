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
from typing import List, Sequence

import torch
from torch import nn

from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.harness.harness_ex import TaskLabelError
from social_mae.heads.group_extractor import GroupExtractor
from social_mae.heads.grouping_loss import GroupingLoss
from social_mae.metrics.eval_report import EvalReport
from social_mae.metrics.group_ap import GroupAp, GroupApConst, ScoredGroupsType
from social_mae.scene.scene import GroupLabelsType, Scene
from social_mae.training.finetune_runner_base import FinetuneRunnerBase
from social_mae.training.task_sample import TaskSample


#
# Classes
#

# Social grouping runner.
# Partitions are expressed over real persons, in their scene order.
class GroupRunner(FinetuneRunnerBase):
    # Get task
    def Task(self) -> TaskTypes:
        return TaskTypes.GROUP

    # Prepare sample
    def PrepareSample(self,
                      scene: Scene,
                      scene_idx: int) -> TaskSample:
        if not scene.HasGroups():
            raise TaskLabelError(f"Scene {scene_idx} has no group labels")
        return self._TokenizeHistory(scene)

    # Batch loss
    def BatchLoss(self,
                  model: nn.Module,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> torch.Tensor:
        losses: List[torch.Tensor] = []
        for sample in batch:
            losses.append(GroupingLoss.Compute(model.Group(sample.tokenized),
                                               GroupRunner.RealPartition(sample.tokenized.scene),
                                               self.config.GetValue(ExperimentConfigTypes.GROUP_LAMBDA_BCE),
                                               self.config.GetValue(ExperimentConfigTypes.GROUP_LAMBDA_EIG),
                                               self.config.GetValue(ExperimentConfigTypes.GROUP_LAMBDA_COUNT),
                                               self.config.GetValue(ExperimentConfigTypes.EIG_ALPHA),
                                               self.config.GetValue(ExperimentConfigTypes.EIG_BETA)))
        return torch.stack(losses).mean()

    # Predict scored groups of every sample
    def PredictGroups(self,
                      model: nn.Module,
                      samples: Sequence[TaskSample]) -> List[ScoredGroupsType]:
        use_count = self.config.GetValue(ExperimentConfigTypes.GROUP_USE_COUNT)

        def predict(mdl: nn.Module,
                    sample: TaskSample,
                    idx: int) -> ScoredGroupsType:
            pred = mdl.Group(sample.tokenized)
            adjacency = pred.RealAdjacency().detach().cpu().numpy()
            partition = GroupExtractor.Extract(adjacency, float(pred.count) if use_count else None)
            return list(zip(partition, GroupExtractor.Confidences(adjacency, partition)))

        return self.MapSamples(model, samples, predict)

    # Evaluate AP per group size and mAP
    def Evaluate(self,
                 model: nn.Module,
                 samples: Sequence[TaskSample]) -> EvalReport:
        predictions = self.PredictGroups(model, samples)
        ground_truth = [GroupRunner.RealPartition(s.tokenized.scene) for s in samples]
        iou_threshold = self.config.GetValue(ExperimentConfigTypes.GROUP_IOU_THRESHOLD)

        report = EvalReport(self.Task(), len(samples))
        aps, mean_ap = GroupAp.ComputeAll(predictions, ground_truth, iou_threshold)
        for size_class in GroupApConst.SIZE_CLASSES:
            report.SetMetric(f"group_ap_g{size_class}", aps[size_class])
            if aps[size_class] is not None:
                recall, precision = GroupAp.PrCurve(predictions, ground_truth, size_class, iou_threshold)
                report.SetCurve(f"pr_g{size_class}", recall, precision)
        report.SetMetric("group_map", mean_ap)

        self.logger.GetLogger().info(f"Grouping over {len(samples)} scenes: mAP {report.Overall():.4f}")
        return report

    # Ground-truth partition over real persons, indexes relative to the real-person order
    @staticmethod
    def RealPartition(scene: Scene) -> GroupLabelsType:
        position = {int(p): k for k, p in enumerate(scene.RealPersons())}
        return [[position[i] for i in group] for group in scene.RealGroups()]

    # Map a real-person partition back to scene person indexes
    @staticmethod
    def ScenePartition(scene: Scene,
                       partition: GroupLabelsType) -> GroupLabelsType:
        real = scene.RealPersons()
        return [[int(real[k]) for k in group] for group in partition]
