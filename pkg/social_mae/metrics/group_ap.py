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
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from social_mae.metrics.metrics_ex import MetricArgumentError


#
# Types
#

# Predicted groups of a scene: (members, confidence)
ScoredGroupsType = List[Tuple[List[int], Optional[float]]]


#
# Classes
#

# Constants for group AP class
class GroupApConst:
    # Size classes
    SIZE_CLASSES: List[str] = ["1", "2", "3", "4", "5+"]


# Social group detection AP by group size.
# A prediction matches an unmatched ground-truth group of the same size class in the same scene when the
# member-set IoU reaches the threshold; AP is the mean of the precisions at each true positive over all
# ground-truth groups of the class.
class GroupAp:
    # Get the size class of a group
    @staticmethod
    def SizeClass(size: int) -> str:
        return str(size) if size < 5 else "5+"

    # Compute AP of a size class, None if the class has no ground truth
    @staticmethod
    def Compute(predictions: Sequence[ScoredGroupsType],
                ground_truth: Sequence[List[List[int]]],
                size_class: str,
                iou_threshold: float = 1.0) -> Optional[float]:
        tp_flags, num_gt = GroupAp.__RankedMatches(predictions, ground_truth, size_class, iou_threshold)
        if num_gt == 0:
            return None
        if tp_flags.size == 0:
            return 0.0
        precisions = np.cumsum(tp_flags) / np.arange(1, tp_flags.size + 1)
        return float(precisions[tp_flags].sum() / num_gt)

    # Compute AP of every size class and their mean over the classes with ground truth
    @staticmethod
    def ComputeAll(predictions: Sequence[ScoredGroupsType],
                   ground_truth: Sequence[List[List[int]]],
                   iou_threshold: float = 1.0) -> Tuple[Dict[str, Optional[float]], Optional[float]]:
        aps = {
            size_class: GroupAp.Compute(predictions, ground_truth, size_class, iou_threshold)
            for size_class in GroupApConst.SIZE_CLASSES
        }
        present = [ap for ap in aps.values() if ap is not None]
        return aps, float(np.mean(present)) if present else None

    # Get precision/recall points of a size class, ranked by confidence
    @staticmethod
    def PrCurve(predictions: Sequence[ScoredGroupsType],
                ground_truth: Sequence[List[List[int]]],
                size_class: str,
                iou_threshold: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
        tp_flags, num_gt = GroupAp.__RankedMatches(predictions, ground_truth, size_class, iou_threshold)
        if num_gt == 0 or tp_flags.size == 0:
            return np.zeros(0), np.zeros(0)
        tps = np.cumsum(tp_flags)
        return tps / num_gt, tps / np.arange(1, tp_flags.size + 1)

    # Member-set IoU
    @staticmethod
    def Iou(group_a: Sequence[int],
            group_b: Sequence[int]) -> float:
        set_a, set_b = set(group_a), set(group_b)
        return len(set_a & set_b) / len(set_a | set_b)

    # Greedy matching in decreasing confidence, return true-positive flags and ground-truth count
    @staticmethod
    def __RankedMatches(predictions: Sequence[ScoredGroupsType],
                        ground_truth: Sequence[List[List[int]]],
                        size_class: str,
                        iou_threshold: float) -> Tuple[np.ndarray, int]:
        if len(predictions) != len(ground_truth):
            raise MetricArgumentError(
                f"Got predictions for {len(predictions)} scenes and ground truth for {len(ground_truth)}"
            )
        if size_class not in GroupApConst.SIZE_CLASSES:
            raise MetricArgumentError(f"Invalid size class {size_class}")

        ranked: List[Tuple[float, int, List[int]]] = []
        for scene_idx, scene_preds in enumerate(predictions):
            for members, confidence in scene_preds:
                if confidence is None:
                    raise MetricArgumentError(f"Predicted group {members} of scene {scene_idx} has no confidence")
                if GroupAp.SizeClass(len(members)) == size_class:
                    ranked.append((confidence, scene_idx, members))
        # Stable sort keeps the input order among equal confidences
        ranked.sort(key=lambda item: -item[0])

        gt_groups = [[g for g in scene_gt if GroupAp.SizeClass(len(g)) == size_class] for scene_gt in ground_truth]
        matched = [[False] * len(groups) for groups in gt_groups]
        tp_flags = np.zeros(len(ranked), dtype=bool)
        for rank, (_, scene_idx, members) in enumerate(ranked):
            best_iou, best_idx = 0.0, -1
            for gt_idx, gt_members in enumerate(gt_groups[scene_idx]):
                if matched[scene_idx][gt_idx]:
                    continue
                iou = GroupAp.Iou(members, gt_members)
                if iou > best_iou:
                    best_iou, best_idx = iou, gt_idx
            if best_idx >= 0 and best_iou >= iou_threshold - 1e-12:
                matched[scene_idx][best_idx] = True
                tp_flags[rank] = True
        return tp_flags, sum(len(groups) for groups in gt_groups)
