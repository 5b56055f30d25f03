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
import numpy as np

from social_mae.metrics.metrics_ex import MetricArgumentError, MetricDegenerateError


#
# Classes
#

# Pose error metrics on arrays [N, J, T, C] with visibility [N, J, T]
class PoseMetrics:
    # Mean Euclidean joint error over visible (person, joint, frame) entries
    @staticmethod
    def Mpjpe(pred: np.ndarray,
              gt: np.ndarray,
              visibility: np.ndarray) -> float:
        pred, gt, visibility = PoseMetrics.__Check(pred, gt, visibility)
        dist = np.linalg.norm(pred - gt, axis=-1)
        return float(dist[visibility].mean())

    # MPJPE at a single future frame (1-based)
    @staticmethod
    def MpjpeAt(pred: np.ndarray,
                gt: np.ndarray,
                visibility: np.ndarray,
                frame: int) -> float:
        if not 1 <= frame <= np.shape(pred)[2]:
            raise MetricArgumentError(f"Frame {frame} out of range [1, {np.shape(pred)[2]}]")
        return PoseMetrics.Mpjpe(np.asarray(pred)[:, :, frame - 1:frame],
                                 np.asarray(gt)[:, :, frame - 1:frame],
                                 np.asarray(visibility)[:, :, frame - 1:frame])

    # Per-timestep VIM [T]: per frame and person, norm of the flattened (J * C) difference divided by J,
    # averaged over the persons visible at that frame (NaN for a frame without any)
    @staticmethod
    def Vim(pred: np.ndarray,
            gt: np.ndarray,
            visibility: np.ndarray) -> np.ndarray:
        pred, gt, visibility = PoseMetrics.__Check(pred, gt, visibility)
        n, j, t, _ = pred.shape
        diff = (pred - gt) * visibility[..., None]
        per_person = np.linalg.norm(np.transpose(diff, (0, 2, 1, 3)).reshape(n, t, -1), axis=-1) / j
        present = visibility.any(axis=1)
        counts = present.sum(axis=0)
        totals = (per_person * present).sum(axis=0)
        return np.where(counts > 0, totals / np.maximum(counts, 1), np.nan)

    # Check inputs
    @staticmethod
    def __Check(pred: np.ndarray,
                gt: np.ndarray,
                visibility: np.ndarray) -> tuple:
        pred = np.asarray(pred, dtype=np.float64)
        gt = np.asarray(gt, dtype=np.float64)
        visibility = np.asarray(visibility, dtype=bool)
        if pred.shape != gt.shape or pred.ndim != 4 or visibility.shape != pred.shape[:3]:
            raise MetricArgumentError(
                f"Shapes do not match: pred {pred.shape}, gt {gt.shape}, visibility {visibility.shape}"
            )
        if not visibility.any():
            raise MetricDegenerateError("No visible entry to evaluate")
        return pred, gt, visibility
