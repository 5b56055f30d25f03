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
import os
from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from social_mae.metrics.eval_report import EvalReport  # noqa: E402
from social_mae.scene.scene import GroupLabelsType, Scene  # noqa: E402
from social_mae.training.metrics_csv_log import MetricsCsvLog  # noqa: E402


#
# Classes
#

# Constants for plot writer class
class PlotWriterConst:
    # Resolution
    DPI: int = 100
    # Figure sizes
    FIG_SIZE: tuple = (6, 4)
    OVERLAY_FIG_SIZE: tuple = (10, 5)
    # Prefix of the precision/recall curves in evaluation reports
    PR_CURVE_PREFIX: str = "pr_"


# Static plot writer class, non-interactive backend
class PlotWriter:
    # Training loss per epoch from a metrics CSV log
    @staticmethod
    def LossCurve(metrics_path: str,
                  out_path: str) -> None:
        rows = [r for r in MetricsCsvLog.Read(metrics_path) if r["split"] == "train" and r["metric"] == "loss"]
        fig, ax = plt.subplots(figsize=PlotWriterConst.FIG_SIZE)
        ax.plot([int(r["epoch"]) for r in rows], [r["value"] for r in rows], marker="o")
        ax.set_xlabel("epoch")
        ax.set_ylabel("training loss")
        ax.set_yscale("log")
        ax.grid(True, alpha=0.3)
        PlotWriter.__Save(fig, out_path)

    # VIM bars at the evaluated timesteps
    @staticmethod
    def VimBars(report: EvalReport,
                out_path: str) -> None:
        timesteps, values = report.curves["vim"]
        fig, ax = plt.subplots(figsize=PlotWriterConst.FIG_SIZE)
        ax.bar([str(int(t)) for t in timesteps], np.nan_to_num(values))
        ax.set_xlabel("future frame")
        ax.set_ylabel("VIM")
        ax.set_title(f"Overall {report.Overall():.2f}")
        PlotWriter.__Save(fig, out_path)

    # Precision/recall curves of every group size class
    @staticmethod
    def PrCurves(report: EvalReport,
                 out_path: str) -> None:
        fig, ax = plt.subplots(figsize=PlotWriterConst.FIG_SIZE)
        for name, (recall, precision) in report.curves.items():
            if name.startswith(PlotWriterConst.PR_CURVE_PREFIX):
                ax.step(recall, precision, where="post", label=name[len(PlotWriterConst.PR_CURVE_PREFIX):].upper())
        ax.set_xlim(0.0, 1.05)
        ax.set_ylim(0.0, 1.05)
        ax.set_xlabel("recall")
        ax.set_ylabel("precision")
        if ax.get_legend_handles_labels()[0]:
            ax.legend()
        PlotWriter.__Save(fig, out_path)

    # Pelvis tracks colored by group, predicted groups next to ground truth
    @staticmethod
    def GroupOverlay(scene: Scene,
                     predicted: GroupLabelsType,
                     ground_truth: GroupLabelsType,
                     out_path: str) -> None:
        fig, axes = plt.subplots(1, 2, figsize=PlotWriterConst.OVERLAY_FIG_SIZE, sharex=True, sharey=True)
        for ax, partition, title in zip(axes, (predicted, ground_truth), ("predicted", "ground truth")):
            colors = plt.cm.tab10(np.arange(max(len(partition), 1)) % 10)
            for g, members in enumerate(partition):
                for p in members:
                    vis = scene.visibility[p, scene.pelvis_index]
                    track = scene.trajectories[p, scene.pelvis_index][vis]
                    if track.shape[0] == 0:
                        continue
                    ax.plot(track[:, 0], track[:, 1], color=colors[g])
                    ax.scatter(track[-1, 0], track[-1, 1], color=colors[g], s=25)
                    ax.annotate(scene.person_ids[p], (track[-1, 0], track[-1, 1]), fontsize=7)
            ax.set_title(f"{title} ({len(partition)} groups)")
            ax.set_aspect("equal", adjustable="datalim")
        if scene.coord_dim == 2:
            # Image coordinates grow downwards
            axes[0].invert_yaxis()
        PlotWriter.__Save(fig, out_path)

    # Headline metric per ablation value, one line per arm
    @staticmethod
    def AblationPlot(axis_name: str,
                     values: Sequence[float],
                     overall: Dict[str, List[float]],
                     metric_name: str,
                     out_path: str) -> None:
        fig, ax = plt.subplots(figsize=PlotWriterConst.FIG_SIZE)
        for arm, arm_values in overall.items():
            ax.plot([str(v) for v in values], arm_values, marker="o", label=arm)
        if len(overall) > 1:
            ax.legend()
        ax.set_xlabel(axis_name)
        ax.set_ylabel(metric_name)
        ax.grid(True, alpha=0.3)
        PlotWriter.__Save(fig, out_path)

    # Save and close figure
    @staticmethod
    def __Save(fig: plt.Figure,
               out_path: str) -> None:
        os.makedirs(os.path.dirname(out_path) or ".", exist_ok=True)
        fig.tight_layout()
        fig.savefig(out_path, dpi=PlotWriterConst.DPI)
        plt.close(fig)
