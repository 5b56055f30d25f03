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
import csv
import itertools
import json
import math
from typing import Any

import numpy as np
import pytest

from social_mae.experiment.task_types import TaskTypes
from social_mae.metrics.action_map import ActionMap
from social_mae.metrics.eval_report import EvalReport
from social_mae.metrics.group_ap import GroupAp
from social_mae.metrics.metrics_ex import MetricArgumentError, MetricDegenerateError
from social_mae.metrics.pose_metrics import PoseMetrics
from social_mae.metrics.spectral_check import SpectralCheck


#
# Tests
#

def test_mpjpe() -> None:
    gt = np.zeros((1, 5, 2, 2))
    vis = np.ones((1, 5, 2), dtype=bool)

    assert PoseMetrics.Mpjpe(gt, gt, vis) == 0.0
    assert PoseMetrics.Mpjpe(gt + [3.0, 4.0], gt, vis) == pytest.approx(5.0)

    pred = gt.copy()
    pred[0, 0, 0, 0] = 1.0
    pred[0, 3, 1, 1] = 3.0
    assert PoseMetrics.Mpjpe(pred, gt, vis) == pytest.approx(0.4)


def test_mpjpe_ignores_invisible() -> None:
    gt = np.zeros((2, 1, 1, 3))
    pred = gt.copy()
    pred[1] = 100.0
    vis = np.array([[[True]], [[False]]])

    assert PoseMetrics.Mpjpe(pred, gt, vis) == 0.0
    with pytest.raises(MetricDegenerateError):
        PoseMetrics.Mpjpe(pred, gt, np.zeros_like(vis))


def test_mpjpe_at_frame() -> None:
    gt = np.zeros((1, 2, 3, 3))
    pred = gt.copy()
    pred[:, :, 2, 2] = 2.0
    vis = np.ones((1, 2, 3), dtype=bool)

    assert PoseMetrics.MpjpeAt(pred, gt, vis, 1) == 0.0
    assert PoseMetrics.MpjpeAt(pred, gt, vis, 3) == pytest.approx(2.0)
    with pytest.raises(MetricArgumentError):
        PoseMetrics.MpjpeAt(pred, gt, vis, 4)


def test_vim() -> None:
    gt = np.zeros((2, 4, 3, 3))
    vis = np.ones((2, 4, 3), dtype=bool)
    pred = gt.copy()
    pred[0, 2, 1] = [0.0, 0.6, 0.8]

    np.testing.assert_array_equal(PoseMetrics.Vim(gt, gt, vis), np.zeros(3))
    # One person off by d / J, the other exact
    np.testing.assert_allclose(PoseMetrics.Vim(pred, gt, vis), [0.0, (1.0 / 4) / 2, 0.0])


def test_vim_single_joint(rng: np.random.Generator) -> None:
    gt = rng.standard_normal((3, 1, 5, 3))
    pred = gt + rng.standard_normal(gt.shape)
    vis = np.ones((3, 1, 5), dtype=bool)
    vim = PoseMetrics.Vim(pred, gt, vis)

    for t in range(5):
        assert vim[t] == pytest.approx(PoseMetrics.MpjpeAt(pred, gt, vis, t + 1))


def test_vim_empty_frame() -> None:
    gt = np.zeros((1, 2, 2, 3))
    vis = np.ones((1, 2, 2), dtype=bool)
    vis[:, :, 1] = False

    vim = PoseMetrics.Vim(gt, gt, vis)

    assert vim[0] == 0.0
    assert math.isnan(vim[1])


def test_pose_metrics_translation(rng: np.random.Generator) -> None:
    gt = rng.standard_normal((3, 4, 5, 3))
    pred = gt + 0.1 * rng.standard_normal(gt.shape)
    vis = rng.uniform(size=gt.shape[:3]) > 0.2
    vis[:, :, 0] = True
    shift = np.array([12.5, -3.0, 0.75])

    assert PoseMetrics.Mpjpe(pred + shift, gt + shift, vis) == pytest.approx(PoseMetrics.Mpjpe(pred, gt, vis))
    np.testing.assert_allclose(PoseMetrics.Vim(pred + shift, gt + shift, vis),
                               PoseMetrics.Vim(pred, gt, vis),
                               rtol=1e-9, atol=1e-12)


def test_group_ap_perfect() -> None:
    gt = [[[0, 1], [2]], [[0, 1, 2], [3, 4, 5, 6, 7]]]
    predictions = [[([0, 1], 0.2), ([2], 0.9)], [([0, 1, 2], 0.5), ([3, 4, 5, 6, 7], 0.1)]]

    aps, mean_ap = GroupAp.ComputeAll(predictions, gt)

    assert aps == {"1": 1.0, "2": 1.0, "3": 1.0, "4": None, "5+": 1.0}
    assert mean_ap == 1.0


def test_group_ap_total_miss() -> None:
    gt = [[[0, 1], [2]]]
    predictions = [[([0], 0.9), ([1], 0.8), ([2], 0.7)]]

    assert GroupAp.Compute(predictions, gt, "2") == 0.0
    assert GroupAp.Compute(predictions, gt, "1") == pytest.approx(1.0 / 3)
    assert GroupAp.Compute(predictions, gt, "3") is None


def test_group_ap_ranked() -> None:
    gt = [[[0, 1], [2, 3]], [[0, 1]]]
    predictions = [[([0, 1], 0.9), ([2, 4], 0.5)], [([0, 1], 0.4)]]

    # TP, FP, TP over 3 ground-truth groups
    assert GroupAp.Compute(predictions, gt, "2") == pytest.approx((1.0 + 2.0 / 3.0) / 3.0)
    recall, precision = GroupAp.PrCurve(predictions, gt, "2")
    np.testing.assert_allclose(recall, [1.0 / 3, 1.0 / 3, 2.0 / 3])
    np.testing.assert_allclose(precision, [1.0, 0.5, 2.0 / 3])


def test_group_ap_iou_threshold() -> None:
    gt = [[[0, 1, 2, 3]]]
    predictions = [[([0, 1, 2, 4], 0.9)]]

    assert GroupAp.Compute(predictions, gt, "4") == 0.0
    assert GroupAp.Compute(predictions, gt, "4", iou_threshold=0.6) == 1.0
    assert GroupAp.Iou([0, 1, 2, 3], [0, 1, 2, 4]) == pytest.approx(0.6)


@pytest.mark.parametrize("factor", [0.25, 8.0])
def test_group_ap_confidence_scale(factor: float) -> None:
    gt = [[[0, 1], [2, 3], [4]], [[0, 1, 2], [3]]]
    predictions = [[([0, 1], 0.7), ([2, 4], 0.9), ([3], 0.4)], [([0, 1, 2], 0.3), ([3], 0.6), ([0, 1], 0.5)]]
    scaled = [[(members, confidence * factor) for members, confidence in scene] for scene in predictions]

    assert GroupAp.ComputeAll(scaled, gt) == GroupAp.ComputeAll(predictions, gt)
    for size_class in ("1", "2", "3"):
        np.testing.assert_array_equal(GroupAp.PrCurve(scaled, gt, size_class)[1],
                                      GroupAp.PrCurve(predictions, gt, size_class)[1])


@pytest.mark.parametrize("factor", [0.25, 8.0])
def test_action_map_score_scale(rng: np.random.Generator,
                                factor: float) -> None:
    targets = rng.uniform(size=(12, 3)) > 0.5
    targets[0] = True
    scores = rng.uniform(size=targets.shape)

    assert ActionMap.Compute(scores * factor, targets) == ActionMap.Compute(scores, targets)


def test_group_ap_errors() -> None:
    with pytest.raises(MetricArgumentError):
        GroupAp.Compute([[([0], None)]], [[[0]]], "1")
    with pytest.raises(MetricArgumentError):
        GroupAp.Compute([[]], [[[0]], [[0]]], "1")
    with pytest.raises(MetricArgumentError):
        GroupAp.Compute([[]], [[[0]]], "6")


def test_action_map_perfect() -> None:
    targets = np.array([[1, 0, 0], [0, 1, 1], [0, 1, 0]], dtype=bool)

    aps, mean_ap = ActionMap.Compute(targets.astype(float), targets)

    assert aps == [1.0, 1.0, 1.0]
    assert mean_ap == 1.0


def test_action_map_inverted() -> None:
    targets = np.array([[True], [False]])
    scores = np.array([[0.1], [0.9]])

    aps, mean_ap = ActionMap.Compute(scores, targets)

    # Positive ranked second: precision 1/2 at the only true positive
    assert aps == [pytest.approx(0.5)]
    assert mean_ap == pytest.approx(0.5)


def test_action_map_absent_class() -> None:
    targets = np.array([[True, False], [False, False], [True, False]])
    scores = np.array([[0.8, 0.3], [0.5, 0.2], [0.7, 0.9]])

    aps, mean_ap = ActionMap.Compute(scores, targets)

    assert aps[1] is None
    assert mean_ap == aps[0] == pytest.approx(1.0)
    with pytest.raises(MetricArgumentError):
        ActionMap.Compute(scores[:, :1], targets)


def test_spectral_examples() -> None:
    blocks = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 1]])

    assert SpectralCheck.LaplacianZeroEigs(np.eye(3)) == SpectralCheck.ConnectedComponents(np.eye(3)) == 3
    assert SpectralCheck.LaplacianZeroEigs(np.ones((4, 4))) == SpectralCheck.ConnectedComponents(np.ones((4, 4))) == 1
    assert SpectralCheck.LaplacianZeroEigs(blocks) == SpectralCheck.ConnectedComponents(blocks) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_spectral_exhaustive(n: int) -> None:
    pairs = list(itertools.combinations(range(n), 2))
    for edges in itertools.product([0, 1], repeat=len(pairs)):
        adjacency = np.eye(n)
        for (i, k), edge in zip(pairs, edges):
            adjacency[i, k] = adjacency[k, i] = edge

        assert SpectralCheck.LaplacianZeroEigs(adjacency) == SpectralCheck.ConnectedComponents(adjacency)


def test_spectral_invalid() -> None:
    with pytest.raises(MetricArgumentError):
        SpectralCheck.LaplacianZeroEigs(np.array([[1, 1], [0, 1]]))
    with pytest.raises(MetricArgumentError):
        SpectralCheck.ConnectedComponents(np.array([[1, 0.5], [0.5, 1]]))


def test_eval_report(tmp_path: Any) -> None:
    report = EvalReport(TaskTypes.GROUP, 3)
    report.SetMetric("group_ap_g1", 0.5)
    report.SetMetric("group_ap_g4", None)
    report.SetMetric("group_map", 0.75)

    assert report.Overall() == 0.75
    assert report.ToDict()["metrics"] == {"group_ap_g1": 0.5, "group_ap_g4": None, "group_map": 0.75}
    with pytest.raises(MetricArgumentError):
        report.GetMetric("vim_overall")

    json_path, csv_path = str(tmp_path / "eval" / "report.json"), str(tmp_path / "eval" / "report.csv")
    report.SaveJson(json_path)
    report.SaveCsv(csv_path)
    with open(json_path, encoding="utf-8") as fin:
        doc = json.load(fin)
    with open(csv_path, encoding="utf-8", newline="") as fin:
        rows = list(csv.reader(fin))

    assert doc["task"] == "group"
    assert doc["overall"] == "group_map"
    assert rows == [["metric", "value"], ["group_ap_g1", "0.5"], ["group_ap_g4", "nan"], ["group_map", "0.75"]]
