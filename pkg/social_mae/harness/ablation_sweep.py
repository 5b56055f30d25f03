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
from typing import Any, Dict, List, Optional, Sequence

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.harness.ablation_axis_types import AblationAxisTypes
from social_mae.harness.experiment_paths import ExperimentPaths, ExperimentPathsConst
from social_mae.harness.experiment_pipeline import ExperimentPipeline
from social_mae.harness.harness_ex import HarnessArgumentError
from social_mae.logger.logger import Logger
from social_mae.metrics.eval_report import EvalReport
from social_mae.plot.plot_writer import PlotWriter


#
# Classes
#

# Constants for ablation sweep class
class AblationSweepConst:
    # Axis to configuration field
    AXIS_TO_CONFIG: Dict[AblationAxisTypes, ExperimentConfigTypes] = {
        AblationAxisTypes.MASK_RATIO: ExperimentConfigTypes.MASK_RATIO,
        AblationAxisTypes.DEC_LAYERS: ExperimentConfigTypes.DEC_LAYERS,
        AblationAxisTypes.DATA_FRACTION: ExperimentConfigTypes.DATA_FRACTION,
        AblationAxisTypes.FINETUNE_FRACTION: ExperimentConfigTypes.FINETUNE_FRACTION,
    }
    # Arms: fine-tuned from the pre-trained encoder, or from a randomly initialized one
    PRETRAINED_ARM: str = "pretrained"
    SCRATCH_ARM: str = "scratch"
    # Table columns after the axis one
    TABLE_COLUMNS: List[str] = ["arm", "metric", "value"]


# Ablation sweep class: the full pipeline once per value of one axis, headline metric collected in a table.
# The fine-tune fraction axis pre-trains once and fine-tunes each fraction of the training set in both arms.
class AblationSweep:

    config: ConfigObject
    logger: Logger

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 logger: Logger) -> None:
        self.config = config
        self.logger = logger

    # Run the sweep, return the table rows
    def Run(self,
            axis: AblationAxisTypes,
            values: Sequence[float]) -> List[Dict[str, Any]]:
        if len(values) == 0:
            raise HarnessArgumentError("Ablation value list is empty")
        axis_name = axis.name.lower()
        converted = [AblationSweep.__ConvertValue(axis, v) for v in values]

        if axis == AblationAxisTypes.FINETUNE_FRACTION:
            if self.config.GetValue(ExperimentConfigTypes.TASK) == TaskTypes.PRETRAIN:
                raise HarnessArgumentError("Fine-tune fraction ablation needs a forecast, group or action task")
            arms = [AblationSweepConst.PRETRAINED_ARM, AblationSweepConst.SCRATCH_ARM]
            pretrain_checkpoint: Optional[str] = self.__SharedPretrain(axis)
        else:
            arms = [AblationSweepConst.PRETRAINED_ARM]
            pretrain_checkpoint = None

        rows: List[Dict[str, Any]] = []
        for value in converted:
            for arm in arms:
                self.logger.GetLogger().info(f"Ablation {axis_name} = {value} ({arm})")
                report = self.__RunValue(axis, value, arm, pretrain_checkpoint)
                rows.append({
                    axis_name: value,
                    "arm": arm,
                    "metric": report.OverallName(),
                    "value": report.Overall(),
                })

        self.__SaveTable(axis_name, rows)
        PlotWriter.AblationPlot(axis_name,
                                converted,
                                {arm: [r["value"] for r in rows if r["arm"] == arm] for arm in arms},
                                rows[0]["metric"],
                                ExperimentPaths.Output(self.config, ExperimentPathsConst.ABLATION_DIR,
                                                       f"{axis_name}.png"))
        return rows

    # Pre-train once for all the values of an axis that only affects fine-tuning, return the checkpoint path
    def __SharedPretrain(self,
                         axis: AblationAxisTypes) -> str:
        sub_config = self.__SubConfig(f"{axis.name.lower()}_pretrain")
        return ExperimentPipeline(sub_config, self.logger).Pretrain()

    # Run the pipeline for a single value and arm
    def __RunValue(self,
                   axis: AblationAxisTypes,
                   value: Any,
                   arm: str,
                   pretrain_checkpoint: Optional[str]) -> EvalReport:
        sub_dir = f"{axis.name.lower()}_{value}"
        if pretrain_checkpoint is not None:
            sub_dir += f"_{arm}"
        sub_config = self.__SubConfig(sub_dir)
        sub_config.SetValue(AblationSweepConst.AXIS_TO_CONFIG[axis], value)

        pipeline = ExperimentPipeline(sub_config, self.logger)
        if arm == AblationSweepConst.SCRATCH_ARM:
            return pipeline.Evaluate(pipeline.Finetune(from_scratch=True))

        checkpoint = pretrain_checkpoint or pipeline.Pretrain()
        if sub_config.GetValue(ExperimentConfigTypes.TASK) != TaskTypes.PRETRAIN:
            checkpoint = pipeline.Finetune(checkpoint)
        return pipeline.Evaluate(checkpoint)

    # Copy of the configuration writing below a sub-directory of the ablation directory
    def __SubConfig(self,
                    sub_dir: str) -> ConfigObject:
        sub_config = self.config.Copy()
        sub_config.SetValue(ExperimentConfigTypes.OUTPUT_DIR,
                            ExperimentPaths.Output(self.config, ExperimentPathsConst.ABLATION_DIR, sub_dir))
        return sub_config

    # Save table as CSV and JSON
    def __SaveTable(self,
                    axis_name: str,
                    rows: List[Dict[str, Any]]) -> None:
        base = ExperimentPaths.Output(self.config, ExperimentPathsConst.ABLATION_DIR, f"{axis_name}_table")
        os.makedirs(os.path.dirname(base), exist_ok=True)
        with open(base + ".csv", "w", encoding="utf-8", newline="") as fout:
            writer = csv.DictWriter(fout, fieldnames=[axis_name] + AblationSweepConst.TABLE_COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
        with open(base + ".json", "w", encoding="utf-8") as fout:
            json_rows = [{**r, "value": None if math.isnan(r["value"]) else r["value"]} for r in rows]
            json.dump({"axis": axis_name, "rows": json_rows}, fout, indent=2, allow_nan=False)
            fout.write("\n")

    # Convert a value to the axis field type
    @staticmethod
    def __ConvertValue(axis: AblationAxisTypes,
                       value: float) -> Any:
        if axis == AblationAxisTypes.DEC_LAYERS:
            if value != int(value) or value < 1:
                raise HarnessArgumentError(f"Decoder depth shall be a positive integer, got {value}")
            return int(value)
        if not 0.0 < value <= 1.0 or (axis == AblationAxisTypes.MASK_RATIO and value == 1.0):
            raise HarnessArgumentError(f"Value {value} out of range for axis {axis.name.lower()}")
        return float(value)
