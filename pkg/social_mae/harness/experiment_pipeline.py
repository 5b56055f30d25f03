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
from typing import Any, Dict, List, Optional

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.harness.dataset_manifest import DatasetManifest
from social_mae.harness.experiment_paths import ExperimentPaths, ExperimentPathsConst
from social_mae.harness.harness_ex import HarnessArgumentError
from social_mae.logger.logger import Logger
from social_mae.metrics.eval_report import EvalReport
from social_mae.model.model_config import ModelConfig
from social_mae.plot.plot_writer import PlotWriter
from social_mae.scene.scene_synthesizer import SceneSynthConfig
from social_mae.training.checkpoint import Checkpoint
from social_mae.training.group_runner import GroupRunner
from social_mae.training.scene_dataset import SceneDataset
from social_mae.training.task_runner_base import TaskRunnerBase
from social_mae.training.task_runner_factory import TaskRunnerFactory
from social_mae.training.task_sample import TaskSample
from social_mae.training.trainer import Trainer, TrainerConst
from social_mae.training.training_ex import ConfigMismatchError


#
# Classes
#

# Experiment pipeline: synthesis, pre-training, fine-tuning and evaluation driven by one configuration.
# The configuration paths shall already be resolved (see ExperimentPaths.Resolve).
class ExperimentPipeline:

    config: ConfigObject
    logger: Logger
    model_config: ModelConfig

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 logger: Logger) -> None:
        self.config = config
        self.logger = logger
        self.model_config = ModelConfig.FromConfig(config)

    # Synthesize the training set, or verify it against its manifest
    def Synth(self,
              verify: bool = False) -> Dict[str, Any]:
        dir_name = ExperimentPaths.TrainDir(self.config)
        if verify:
            manifest = DatasetManifest.Verify(dir_name)
            self.logger.GetLogger().info(f"Dataset {dir_name} verified ({manifest['num_scenes']} scenes)")
            return manifest

        num_scenes = self.config.GetValue(ExperimentConfigTypes.SYNTH_NUM_SCENES)
        manifest = DatasetManifest.Synthesize(dir_name,
                                              SceneSynthConfig.FromConfig(self.config),
                                              num_scenes,
                                              self.config.GetValue(ExperimentConfigTypes.SEED))
        self.logger.GetLogger().info(f"Synthesized {num_scenes} scenes into {dir_name}")
        return manifest

    # Pre-train the masked autoencoder, return the last checkpoint path
    def Pretrain(self,
                 resume: Optional[str] = None) -> str:
        runner = self.__Runner(TaskTypes.PRETRAIN)
        scenes = SceneDataset.Load(ExperimentPaths.PretrainDir(self.config),
                                   self.config.GetValue(ExperimentConfigTypes.DATA_FRACTION))
        # The corpus size is recorded, it is not derived from anything else
        self.logger.GetLogger().info(f"Pre-training corpus: {len(scenes)} scenes")

        model = runner.BuildModel()
        self.logger.GetLogger().info(
            f"Encoder parameters: {model.EncoderParameterCount()}, decoder parameters: {model.DecoderParameterCount()}"
        )
        result = Trainer(self.config, self.logger, runner).Train(model,
                                                                 runner.PrepareSamples(scenes),
                                                                 TaskTypes.PRETRAIN.name.lower(),
                                                                 self.__PeriodicEvalSamples(runner),
                                                                 resume)
        PlotWriter.LossCurve(result.metrics_path, self.__PlotPath(TaskTypes.PRETRAIN, "loss"))
        return result.checkpoint_path

    # Fine-tune the configured task, from a pre-trained encoder or from scratch, return the last checkpoint path
    def Finetune(self,
                 checkpoint: Optional[str] = None,
                 from_scratch: bool = False,
                 resume: Optional[str] = None) -> str:
        task = self.config.GetValue(ExperimentConfigTypes.TASK)
        if task == TaskTypes.PRETRAIN:
            raise HarnessArgumentError("Fine-tuning needs a forecast, group or action task")

        runner = self.__Runner(task)
        samples = runner.PrepareSamples(SceneDataset.Load(ExperimentPaths.TrainDir(self.config),
                                                          self.config.GetValue(ExperimentConfigTypes.FINETUNE_FRACTION)))
        self.logger.GetLogger().info(f"Fine-tuning set: {len(samples)} labeled scenes")
        model = runner.BuildModel()
        if resume is None and not from_scratch:
            self.__LoadEncoder(model, checkpoint or self.__DefaultPretrainCheckpoint())
        elif from_scratch:
            self.logger.GetLogger().info("Fine-tuning from a randomly initialized encoder")

        result = Trainer(self.config, self.logger, runner).Train(model,
                                                                 samples,
                                                                 task.name.lower(),
                                                                 self.__PeriodicEvalSamples(runner),
                                                                 resume)
        PlotWriter.LossCurve(result.metrics_path, self.__PlotPath(task, "loss"))
        return result.checkpoint_path

    # Evaluate a checkpoint on the evaluation set, write JSON, CSV and plots
    def Evaluate(self,
                 checkpoint: str) -> EvalReport:
        loaded = Checkpoint.Load(checkpoint)
        task = loaded.task
        runner = TaskRunnerFactory.CreateRunner(task, self.config, loaded.model_config, self.logger)
        model = runner.BuildModel()
        model.load_state_dict(loaded.state_dict)

        samples = self.__EvalSamples(runner)
        report = runner.Evaluate(model, samples)

        name = task.name.lower()
        report.SaveJson(ExperimentPaths.Output(self.config, ExperimentPathsConst.EVAL_DIR, f"{name}_report.json"))
        report.SaveCsv(ExperimentPaths.Output(self.config, ExperimentPathsConst.EVAL_DIR, f"{name}_report.csv"))
        self.__Plot(runner, model, samples, report)
        self.logger.GetLogger().info(f"Evaluation of {checkpoint}: {report.OverallName()} = {report.Overall():.6f}")
        return report

    # Write the plots of a report
    def __Plot(self,
               runner: TaskRunnerBase,
               model: Any,
               samples: List[TaskSample],
               report: EvalReport) -> None:
        task = report.task
        metrics_path = ExperimentPaths.Output(self.config, TrainerConst.METRICS_FILE_FORMAT.format(task.name.lower()))
        if os.path.exists(metrics_path):
            PlotWriter.LossCurve(metrics_path, self.__PlotPath(task, "loss"))
        if task == TaskTypes.FORECAST:
            PlotWriter.VimBars(report, self.__PlotPath(task, "vim"))
        elif task == TaskTypes.GROUP:
            assert isinstance(runner, GroupRunner)
            PlotWriter.PrCurves(report, self.__PlotPath(task, "pr"))
            scene = samples[0].tokenized.scene
            predicted = [members for members, _ in runner.PredictGroups(model, samples[:1])[0]]
            PlotWriter.GroupOverlay(scene,
                                    GroupRunner.ScenePartition(scene, predicted),
                                    scene.RealGroups(),
                                    self.__PlotPath(task, "groups_scene0"))

    # Load the encoder of a checkpoint into a task model
    def __LoadEncoder(self,
                      model: Any,
                      checkpoint: str) -> None:
        loaded = Checkpoint.Load(checkpoint)
        expected = self.model_config.EncoderSignature()
        got = loaded.model_config.EncoderSignature()
        if expected != got:
            diff = [k for k in expected if expected[k] != got.get(k)]
            raise ConfigMismatchError(f"Checkpoint {checkpoint} encoder architecture differs in: {', '.join(diff)}")
        model.LoadEncoder(loaded.state_dict)
        self.logger.GetLogger().info(f"Encoder loaded from {checkpoint}")

    # Get the last pre-training checkpoint of the output directory
    def __DefaultPretrainCheckpoint(self) -> str:
        path = ExperimentPaths.Output(self.config,
                                      TrainerConst.CHECKPOINT_DIR,
                                      TrainerConst.LAST_CHECKPOINT_FORMAT.format(TaskTypes.PRETRAIN.name.lower()))
        if not os.path.exists(path):
            raise HarnessArgumentError(f"No checkpoint given and no pre-training checkpoint found at {path}")
        return path

    # Get evaluation samples
    def __EvalSamples(self,
                      runner: TaskRunnerBase) -> List[TaskSample]:
        return runner.PrepareSamples(SceneDataset.Load(ExperimentPaths.EvalDir(self.config)))

    # Get the evaluation samples used during training, none if periodic evaluation is disabled
    def __PeriodicEvalSamples(self,
                              runner: TaskRunnerBase) -> Optional[List[TaskSample]]:
        if self.config.GetValue(ExperimentConfigTypes.EVAL_EVERY) == 0:
            return None
        return self.__EvalSamples(runner)

    # Create runner
    def __Runner(self,
                 task: TaskTypes) -> TaskRunnerBase:
        return TaskRunnerFactory.CreateRunner(task, self.config, self.model_config, self.logger)

    # Get plot path
    def __PlotPath(self,
                   task: TaskTypes,
                   name: str) -> str:
        return ExperimentPaths.Output(self.config, ExperimentPathsConst.PLOTS_DIR, f"{task.name.lower()}_{name}.png")
