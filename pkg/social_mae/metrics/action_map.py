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
from typing import List, Optional, Tuple

import numpy as np
from sklearn.metrics import average_precision_score

from social_mae.metrics.metrics_ex import MetricArgumentError


#
# Classes
#

# Action detection mAP: per-class AP over all (person, class) decisions, classes without positives excluded
class ActionMap:
    # Compute per-class APs and their mean
    @staticmethod
    def Compute(scores: np.ndarray,
                targets: np.ndarray) -> Tuple[List[Optional[float]], Optional[float]]:
        scores = np.asarray(scores, dtype=np.float64)
        targets = np.asarray(targets, dtype=bool)
        if scores.shape != targets.shape or scores.ndim != 2:
            raise MetricArgumentError(f"Scores shape {scores.shape} does not match targets shape {targets.shape}")

        aps: List[Optional[float]] = []
        for c in range(scores.shape[1]):
            if not targets[:, c].any():
                aps.append(None)
            else:
                aps.append(float(average_precision_score(targets[:, c], scores[:, c])))
        present = [ap for ap in aps if ap is not None]
        return aps, float(np.mean(present)) if present else None
