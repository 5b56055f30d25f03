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
from social_mae.heads.forecast_loss import ForecastLoss
from social_mae.metrics.eval_report import EvalReport
from social_mae.metrics.metrics_ex import MetricDegenerateError
from social_mae.metrics.pose_metrics import PoseMetrics
from social_mae.scene.scene import Scene
from social_mae.token.scene_tokenizer import SceneTokenizer
from social_mae.training.finetune_runner_base import FinetuneRunnerBase
from social_mae.training.task_sample import TaskSample


#
# Classes
#

# Multi-person pose forecasting runner.
# The first history_frames frames are the input, the next future_frames frames the target.
class ForecastRunner(FinetuneRunnerBase):
    # Get task
    def Task(self) -> TaskTypes:
        return TaskTypes.FORECAST

    # Prepare sample
    def PrepareSample(self,
                      scene: Scene,
                      scene_idx: int) -> TaskSample:
        t, tau = self.model_config.history_frames, self.model_config.future_frames
        if scene.NumFrames() < t + tau:
            raise TaskLabelError(
                f"Scene {scene_idx} has {scene.NumFrames()} frames, forecasting needs {t + tau} ({t} + {tau})"
            )
        future = scene.Slice(t, t + tau)
        if not future.visibility.any():
            raise TaskLabelError(f"Scene {scene_idx} has no visible joint in the future window")
        return TaskSample(scene, SceneTokenizer.Tokenize(scene.Slice(0, t), t), future)

    # Batch loss
    def BatchLoss(self,
                  model: nn.Module,
                  batch: Sequence[TaskSample],
                  mask_seeds: Sequence[int]) -> torch.Tensor:
        weights = self.config.GetValue(ExperimentConfigTypes.FORECAST_LAYER_WEIGHTS)
        losses: List[torch.Tensor] = []
        for sample in batch:
            assert sample.future is not None
            losses.append(ForecastLoss.Compute(model.Forecast(sample.tokenized),
                                               sample.future.trajectories,
                                               sample.future.visibility,
                                               weights))
        return torch.stack(losses).mean()

    # Evaluate VIM and MPJPE over all persons of all scenes
    def Evaluate(self,
                 model: nn.Module,
                 samples: Sequence[TaskSample]) -> EvalReport:
        def predict(mdl: nn.Module,
                    sample: TaskSample,
                    idx: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
            assert sample.future is not None
            pred = mdl.Forecast(sample.tokenized).Final().detach().cpu().numpy().astype(np.float64)
            return pred, sample.future.trajectories, sample.future.visibility

        results = self.MapSamples(model, samples, predict)
        pred = np.concatenate([r[0] for r in results], axis=0)
        gt = np.concatenate([r[1] for r in results], axis=0)
        visibility = np.concatenate([r[2] for r in results], axis=0)

        report = EvalReport(self.Task(), len(samples))
        vim = PoseMetrics.Vim(pred, gt, visibility) * self.config.GetValue(ExperimentConfigTypes.VIM_SCALE)
        timesteps = self.config.GetValue(ExperimentConfigTypes.VIM_TIMESTEPS)
        selected = np.asarray([vim[t - 1] for t in timesteps], dtype=np.float64)
        for t, value in zip(timesteps, selected):
            report.SetMetric(f"vim_t{t}", value)
        report.SetMetric("vim_overall", float(np.nanmean(selected)) if not np.all(np.isnan(selected)) else None)
        report.SetCurve("vim", np.asarray(timesteps, dtype=np.float64), selected)

        for h in self.config.GetValue(ExperimentConfigTypes.MPJPE_HORIZONS):
            try:
                report.SetMetric(f"mpjpe_h{h}", PoseMetrics.MpjpeAt(pred, gt, visibility, h))
            except MetricDegenerateError:
                report.SetMetric(f"mpjpe_h{h}", None)

        self.logger.GetLogger().info(
            f"Forecasting over {len(samples)} scenes: VIM overall {report.Overall():.4f}"
        )
        return report
