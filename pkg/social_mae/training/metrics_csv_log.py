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
import math
import os
from typing import Dict, List, Union


#
# Classes
#

# Constants for metrics CSV log class
class MetricsCsvLogConst:
    # Header
    HEADER: List[str] = ["step", "epoch", "split", "metric", "value"]


# Metrics CSV log class, one row per (step, metric)
class MetricsCsvLog:

    path: str

    # Constructor
    def __init__(self,
                 path: str,
                 append: bool = False) -> None:
        self.path = path
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        if not append or not os.path.exists(path):
            with open(path, "w", encoding="utf-8", newline="") as fout:
                csv.writer(fout).writerow(MetricsCsvLogConst.HEADER)

    # Write a row
    def Write(self,
              step: int,
              epoch: int,
              split: str,
              metric: str,
              value: float) -> None:
        with open(self.path, "a", encoding="utf-8", newline="") as fout:
            csv.writer(fout).writerow([step, epoch, split, metric, MetricsCsvLog.__Format(value)])

    # Drop the rows logged after an epoch, return the number of dropped rows
    def Truncate(self,
                 max_epoch: int) -> int:
        with open(self.path, "r", encoding="utf-8", newline="") as fin:
            reader = csv.DictReader(fin)
            rows = list(reader)
        kept = [row for row in rows if int(row["epoch"]) <= max_epoch]
        if len(kept) == len(rows):
            return 0

        with open(self.path, "w", encoding="utf-8", newline="") as fout:
            writer = csv.DictWriter(fout, fieldnames=MetricsCsvLogConst.HEADER)
            writer.writeheader()
            writer.writerows(kept)
        return len(rows) - len(kept)

    # Read all rows
    @staticmethod
    def Read(path: str) -> List[Dict[str, Union[str, float]]]:
        with open(path, "r", encoding="utf-8", newline="") as fin:
            rows: List[Dict[str, Union[str, float]]] = []
            for row in csv.DictReader(fin):
                rows.append({**row, "value": float(row["value"])})
            return rows

    # Format value, full precision
    @staticmethod
    def __Format(value: float) -> str:
        return "nan" if value is None or math.isnan(value) else repr(float(value))
