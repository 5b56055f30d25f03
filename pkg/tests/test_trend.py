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
import math
from typing import Any

import numpy as np
import pytest

from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.harness.dataset_manifest import DatasetManifest
from social_mae.harness.experiment_pipeline import ExperimentPipeline
from social_mae.scene.scene_synthesizer import SceneSynthConfig


#
# Variables
#

# Seeds the trend is averaged over
TREND_SEEDS = [0, 1, 2]


#
# Tests
#

# Pre-training on a large unlabeled corpus helps grouping when labels are scarce
@pytest.mark.slow
def test_pretraining_helps_grouping_with_few_labels(load_experiment: Any,
                                                    tmp_path: Any) -> None:
    finetuned_maps, scratch_maps = [], []
    for seed in TREND_SEEDS:
        root = tmp_path / f"seed{seed}"
        config, logger = load_experiment(seed=seed,
                                         output_dir=str(root / "pretrained"),
                                         dataset_dir=str(root / "labeled"),
                                         pretrain_dataset_dir=str(root / "corpus"),
                                         pretrain_epochs=20,
                                         finetune_epochs=30,
                                         batch_size=8,
                                         mask_ratio=0.5)
        config.SetValue(ExperimentConfigTypes.EVAL_DATASET_DIR, str(root / "eval"))
        synth_config = SceneSynthConfig.FromConfig(config)
        # Disjoint seeds for the three sets
        DatasetManifest.Synthesize(str(root / "corpus"), synth_config, 200, 1000 + seed)
        DatasetManifest.Synthesize(str(root / "labeled"), synth_config, 8, 2000 + seed)
        DatasetManifest.Synthesize(str(root / "eval"), synth_config, 32, 3000 + seed)

        pipeline = ExperimentPipeline(config, logger)
        checkpoint = pipeline.Finetune(pipeline.Pretrain())
        finetuned_maps.append(pipeline.Evaluate(checkpoint).GetMetric("group_map"))

        scratch_config = config.Copy()
        scratch_config.SetValue(ExperimentConfigTypes.OUTPUT_DIR, str(root / "scratch"))
        scratch = ExperimentPipeline(scratch_config, logger)
        scratch_maps.append(scratch.Evaluate(scratch.Finetune(from_scratch=True)).GetMetric("group_map"))

    assert all(not math.isnan(v) for v in finetuned_maps + scratch_maps)
    assert np.mean(finetuned_maps) >= np.mean(scratch_maps)
