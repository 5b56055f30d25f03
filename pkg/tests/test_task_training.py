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
from typing import Any, Callable, List, Tuple

import numpy as np
import pytest
import torch

from social_mae.experiment.task_types import TaskTypes
from social_mae.heads.action_loss import ActionLoss
from social_mae.heads.forecast_loss import ForecastLoss
from social_mae.heads.grouping_loss import GroupingLoss
from social_mae.heads.task_model import TaskModel
from social_mae.model.mae_stepper import MaeStepper
from social_mae.model.model_config import ModelConfig
from social_mae.scene.scene import Scene
from social_mae.token.scene_tokenizer import SceneTokenizer
from social_mae.training.action_runner import ActionRunner
from social_mae.training.group_runner import GroupRunner
from social_mae.training.task_runner_factory import TaskRunnerFactory


#
# Variables
#

# Smallest model the heads can be built on
TINY_CONFIG = ModelConfig(enc_layers=1, enc_heads=2, enc_dim=8, dec_layers=1, dec_heads=2, dec_dim=16,
                          num_joints=4, history_frames=6, future_frames=4, max_persons=4,
                          pair_emb_dim=4, num_pose_actions=3, num_interactions=4)


#
# Functions
#

# Loss of a task model as a function of its input projection weight
def loss_of_projection(model: TaskModel,
                       loss_fct: Callable[[TaskModel], torch.Tensor]) -> Callable[[torch.Tensor], torch.Tensor]:
    projection = model.encoder.content_proj
    del projection.weight

    def loss(weight: torch.Tensor) -> torch.Tensor:
        projection.weight = weight
        return loss_fct(model)

    return loss


# Check the gradient of a task loss through encoder and head
def check_task_gradient(task: TaskTypes,
                        loss_fct: Callable[[TaskModel], torch.Tensor]) -> None:
    torch.manual_seed(0)
    model = TaskModel(TINY_CONFIG, task).double()
    weight = model.encoder.content_proj.weight.detach().clone().requires_grad_(True)

    assert torch.autograd.gradcheck(loss_of_projection(model, loss_fct), (weight,), eps=1e-6, atol=1e-5)


# Everyone keeps the pose of the first frame
def stationary_scene(make_scene: Any) -> Scene:
    scene = make_scene(0)
    trajectories = np.repeat(scene.trajectories[:, :, :1], scene.NumFrames(), axis=2)
    return Scene(trajectories, np.ones(trajectories.shape[:3], dtype=bool), scene.pelvis_index)


# Fine-tune a task runner on its own samples for a number of steps
def overfit(load_experiment: Any,
            make_scene: Any,
            task: TaskTypes,
            steps: int) -> Tuple[Any, Any, List[Any], Any]:
    config, logger = load_experiment(task=task.name.lower(), finetune_epochs=steps, finetune_lr=2e-3)
    runner = TaskRunnerFactory.CreateRunner(task, config, ModelConfig.FromConfig(config), logger)
    samples = runner.PrepareSamples([make_scene(seed) for seed in range(4)])
    model = runner.BuildModel()
    stepper = runner.BuildStepper(model)
    for _ in range(steps):
        runner.TrainStep(model, stepper, samples, [0] * len(samples))
    return runner, model, samples, runner.Evaluate(model, samples)


#
# Tests
#

def test_forecast_loss_gradcheck(make_scene: Any) -> None:
    scene = make_scene(0)
    sample = SceneTokenizer.Tokenize(scene.Slice(0, 6), 6)
    future = scene.Slice(6, 10)

    check_task_gradient(TaskTypes.FORECAST,
                        lambda m: ForecastLoss.Compute(m.Forecast(sample), future.trajectories, future.visibility))


def test_grouping_loss_gradcheck(make_scene: Any) -> None:
    scene = make_scene(0)
    sample = SceneTokenizer.Tokenize(scene.Slice(0, 6), 6)

    check_task_gradient(TaskTypes.GROUP,
                        lambda m: GroupingLoss.Compute(m.Group(sample), GroupRunner.RealPartition(scene)))


def test_action_loss_gradcheck(make_scene: Any) -> None:
    scene = make_scene(0)
    sample = SceneTokenizer.Tokenize(scene.Slice(0, 6), 6)
    real = scene.RealPersons()

    check_task_gradient(TaskTypes.ACTION,
                        lambda m: ActionLoss.Compute(ActionRunner.RealPrediction(m.Actions(sample), real),
                                                     scene.pose_actions[real],
                                                     scene.interaction_actions[real]))


@pytest.mark.slow
def test_overfit_stationary_forecast(make_scene: Any,
                                     toy_model_config: ModelConfig) -> None:
    scene = stationary_scene(make_scene)
    sample = SceneTokenizer.Tokenize(scene.Slice(0, 6), 6)
    future = scene.Slice(6, 10)
    torch.manual_seed(0)
    model = TaskModel(toy_model_config, TaskTypes.FORECAST)
    stepper = MaeStepper(model.parameters(), 2e-3, 1000, 0.1, 0.75)

    for _ in range(600):
        stepper.Step(lambda: ForecastLoss.Compute(model.Forecast(sample), future.trajectories, future.visibility))

    final = model.Forecast(sample).Final().detach().numpy()
    assert float(np.mean((final - future.trajectories) ** 2)) < 1e-2


@pytest.mark.slow
def test_overfit_grouping(load_experiment: Any,
                          make_scene: Any) -> None:
    _, model, samples, report = overfit(load_experiment, make_scene, TaskTypes.GROUP, 400)

    assert report.GetMetric("group_map") == pytest.approx(1.0)
    # The count head learns the number of groups of every scene
    for sample in samples:
        count = float(model.Group(sample.tokenized).count)
        assert abs(count - len(GroupRunner.RealPartition(sample.tokenized.scene))) <= 0.25


@pytest.mark.slow
def test_overfit_actions(load_experiment: Any,
                         make_scene: Any) -> None:
    _, _, _, report = overfit(load_experiment, make_scene, TaskTypes.ACTION, 400)

    assert report.GetMetric("action_map") == pytest.approx(1.0)
