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
from typing import Any, Callable, Dict, Tuple

import numpy as np
import pytest
import torch

from social_mae.config.config_file_sections_loader import ConfigFileSectionsLoader
from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config import ExperimentConfig
from social_mae.harness.experiment_paths import ExperimentPaths
from social_mae.logger.logger import Logger
from social_mae.model.model_config import ModelConfig
from social_mae.scene.scene import Scene
from social_mae.scene.scene_synthesizer import SceneSynthConfig, SceneSynthesizer


#
# Variables
#

# Toy experiment configuration, fields are replaced through format keys
TOY_CONFIG_TEXT = """
[experiment]
task             = {task}
seed             = {seed}
output_dir       = {output_dir}
eval_every       = {eval_every}
checkpoint_every = {checkpoint_every}
batch_size       = {batch_size}

[model]
enc_layers       = 2
enc_dim          = 16
enc_heads        = 2
pos_dim          = 8
dec_layers       = {dec_layers}
dec_dim          = 16
dec_heads        = 2
mask_ratio       = {mask_ratio}
pretrain_epochs  = {pretrain_epochs}
pretrain_lr      = {pretrain_lr}
finetune_epochs  = {finetune_epochs}
finetune_lr      = {finetune_lr}
lr_decay_factor  = 0.1
lr_decay_at      = 0.75
loss_scope       = masked_only
coord_dim        = 3
num_joints       = 4
history_frames   = 6
future_frames    = 4
max_persons      = 8
pair_emb_dim     = 8
num_pose_actions = 3
num_interactions = 4

[data]
dataset_dir          = {dataset_dir}
{pretrain_dataset_line}
data_fraction        = {data_fraction}
finetune_fraction    = {finetune_fraction}
synth_num_scenes     = {synth_num_scenes}
synth_num_persons    = 4
synth_num_groups     = 2
synth_noise          = 0.01

[eval]
group_iou_threshold = 1.0
vim_timesteps       = 1,2,4
mpjpe_horizons      = 2,4

[logging]
log_level           = WARNING
log_console_enabled = False
log_file_enabled    = False
"""

# Default values of the format keys
TOY_CONFIG_DEFAULTS: Dict[str, Any] = {
    "task": "group",
    "seed": 0,
    "output_dir": "out",
    "eval_every": 0,
    "checkpoint_every": 1,
    "batch_size": 2,
    "dec_layers": 1,
    "mask_ratio": 0.5,
    "pretrain_epochs": 5,
    "pretrain_lr": 1e-3,
    "finetune_epochs": 5,
    "finetune_lr": 1e-3,
    "dataset_dir": "data/train",
    "pretrain_dataset_line": "",
    "data_fraction": 1.0,
    "finetune_fraction": 1.0,
    "synth_num_scenes": 4,
}


#
# Fixtures
#

# Deterministic single-threaded torch
@pytest.fixture(autouse=True)
def single_thread(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SOCIALMAE_THREADS", "1")
    torch.set_num_threads(1)


# Toy model configuration
@pytest.fixture
def toy_model_config() -> ModelConfig:
    return ModelConfig(enc_layers=2,
                       enc_heads=2,
                       enc_dim=16,
                       dec_layers=1,
                       dec_heads=2,
                       dec_dim=16,
                       pretrain_epochs=5,
                       pretrain_lr=1e-3,
                       finetune_epochs=5,
                       num_joints=4,
                       history_frames=6,
                       future_frames=4,
                       max_persons=8,
                       pair_emb_dim=8,
                       num_pose_actions=3,
                       num_interactions=4)


# Toy synthesis configuration (history + future frames)
@pytest.fixture
def toy_synth_config() -> SceneSynthConfig:
    return SceneSynthConfig(num_persons=4,
                            num_joints=4,
                            num_frames=10,
                            coord_dim=3,
                            num_groups=2,
                            noise=0.01,
                            num_pose_actions=3,
                            num_interactions=4)


# Scene factory
@pytest.fixture
def make_scene(toy_synth_config: SceneSynthConfig) -> Callable[..., Scene]:
    def make(seed: int = 0,
             **kwargs: Any) -> Scene:
        config = SceneSynthConfig(**{**toy_synth_config.ToDict(), **kwargs})
        return SceneSynthesizer.Synthesize(config, seed)

    return make


# Toy configuration file writer, returns the file path
@pytest.fixture
def write_config(tmp_path: Any) -> Callable[..., str]:
    def write(file_name: str = "config.ini",
              **kwargs: Any) -> str:
        values = {**TOY_CONFIG_DEFAULTS, "output_dir": str(tmp_path / "out"), **kwargs}
        if "pretrain_dataset_dir" in kwargs:
            values["pretrain_dataset_line"] = f"pretrain_dataset_dir = {kwargs['pretrain_dataset_dir']}"
        path = os.path.join(str(tmp_path), file_name)
        with open(path, "w", encoding="utf-8") as fout:
            fout.write(TOY_CONFIG_TEXT.format(**values))
        return path

    return write


# Random generator
@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


# Toy experiment factory: writes the configuration, loads it and resolves its paths
@pytest.fixture
def load_experiment(write_config: Callable[..., str]) -> Callable[..., Tuple[ConfigObject, Logger]]:
    def load(**kwargs: Any) -> Tuple[ConfigObject, Logger]:
        config, _ = ConfigFileSectionsLoader.Load(write_config(**kwargs), ExperimentConfig)
        ExperimentPaths.Resolve(config)
        return config, Logger(config)

    return load
