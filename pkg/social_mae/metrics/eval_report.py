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
import json
import math
import os
from typing import Any, Dict, Optional, Tuple

import numpy as np

from social_mae.experiment.task_types import TaskTypes
from social_mae.metrics.metrics_ex import MetricArgumentError


#
# Classes
#

# Constants for evaluation report class
class EvalReportConst:
    # Headline metric of each task
    TASK_TO_OVERALL: Dict[TaskTypes, str] = {
        TaskTypes.PRETRAIN: "reconstruction_mse",
        TaskTypes.FORECAST: "vim_overall",
        TaskTypes.GROUP: "group_map",
        TaskTypes.ACTION: "action_map",
    }


# Evaluation report: named scalar metrics of a task over a dataset, plus the curves used for plots
class EvalReport:

    task: TaskTypes
    num_scenes: int
    metrics: Dict[str, float]
    curves: Dict[str, Tuple[np.ndarray, np.ndarray]]

    # Constructor
    def __init__(self,
                 task: TaskTypes,
                 num_scenes: int) -> None:
        self.task = task
        self.num_scenes = num_scenes
        self.metrics = {}
        self.curves = {}

    # Set a metric, None is stored as NaN
    def SetMetric(self,
                  name: str,
                  value: Optional[float]) -> None:
        self.metrics[name] = math.nan if value is None else float(value)

    # Get a metric
    def GetMetric(self,
                  name: str) -> float:
        if name not in self.metrics:
            raise MetricArgumentError(f"Metric {name} is not in the report")
        return self.metrics[name]

    # Set a curve (x, y)
    def SetCurve(self,
                 name: str,
                 x: np.ndarray,
                 y: np.ndarray) -> None:
        self.curves[name] = (np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))

    # Get the headline metric name
    def OverallName(self) -> str:
        return EvalReportConst.TASK_TO_OVERALL[self.task]

    # Get the headline metric
    def Overall(self) -> float:
        return self.GetMetric(self.OverallName())

    # Convert to dictionary, NaN becomes null
    def ToDict(self) -> Dict[str, Any]:
        return {
            "task": self.task.name.lower(),
            "num_scenes": self.num_scenes,
            "overall": self.OverallName(),
            "metrics": {k: (None if math.isnan(v) else v) for k, v in self.metrics.items()},
        }

    # Save as JSON
    def SaveJson(self,
                 path: str) -> None:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8") as fout:
            json.dump(self.ToDict(), fout, indent=2, allow_nan=False)
            fout.write("\n")

    # Save as CSV (metric,value)
    def SaveCsv(self,
                path: str) -> None:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fout:
            writer = csv.writer(fout)
            writer.writerow(["metric", "value"])
            for name, value in self.metrics.items():
                writer.writerow([name, "nan" if math.isnan(value) else repr(value)])
