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
import logging

from social_mae.config.config_object import ConfigObject
from social_mae.config.config_typing import ConfigSectionsType
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.experiment.task_types import TaskTypes
from social_mae.harness.ablation_axis_types import AblationAxisTypes
from social_mae.model.loss_scope_types import LossScopeTypes
from social_mae.utils.key_value_converter import KeyValueConverter
from social_mae.utils.utils import Utils


#
# Classes
#

# Utility functions for experiment configuration
class _ExperimentConfigUtils:
    # Get if value is strictly positive
    @staticmethod
    def IsPositive(config: ConfigObject,
                   val: float) -> bool:
        return val > 0

    # Get if value is non-negative
    @staticmethod
    def IsNonNegative(config: ConfigObject,
                      val: float) -> bool:
        return val >= 0

    # Get if value is in the open interval (0, 1)
    @staticmethod
    def IsOpenRatio(config: ConfigObject,
                    val: float) -> bool:
        return 0.0 < val < 1.0

    # Get if value is in the interval (0, 1]
    @staticmethod
    def IsFraction(config: ConfigObject,
                   val: float) -> bool:
        return 0.0 < val <= 1.0

    # Get if the encoder head count divides the encoder width
    @staticmethod
    def AreEncoderHeadsValid(config: ConfigObject,
                             val: int) -> bool:
        return val > 0 and config.GetValue(ExperimentConfigTypes.ENC_DIM) % val == 0

    # Get if the decoder head count divides the decoder width
    @staticmethod
    def AreDecoderHeadsValid(config: ConfigObject,
                             val: int) -> bool:
        return val > 0 and config.GetValue(ExperimentConfigTypes.DEC_DIM) % val == 0

    # Get if the decoder is wider than the concatenated position embedding
    @staticmethod
    def IsDecoderDimValid(config: ConfigObject,
                          val: int) -> bool:
        return val > config.GetValue(ExperimentConfigTypes.POS_DIM)

    # Get if all timesteps lie inside the future window
    @staticmethod
    def AreTimestepsValid(config: ConfigObject,
                          val: list) -> bool:
        future_frames = config.GetValue(ExperimentConfigTypes.FUTURE_FRAMES)
        return len(val) > 0 and all(1 <= t <= future_frames for t in val)


#
# Variables
#

# Logging level converter
LoggingLevelConverter = KeyValueConverter({
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
})

# Task converter
TaskConverter = KeyValueConverter({t.name: t for t in TaskTypes})
# Loss scope converter
LossScopeConverter = KeyValueConverter({s.name: s for s in LossScopeTypes})
# Ablation axis converter
AblationAxisConverter = KeyValueConverter({a.name: a for a in AblationAxisTypes})


# Experiment configuration
ExperimentConfig: ConfigSectionsType = {
    # Experiment
    "experiment": [
        {
            "type": ExperimentConfigTypes.TASK,
            "name": "task",
            "conv_fct": TaskConverter.KeyToValue,
            "print_fct": lambda val: val.name.lower(),
        },
        {
            "type": ExperimentConfigTypes.SEED,
            "name": "seed",
            "conv_fct": Utils.StrToInt,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.OUTPUT_DIR,
            "name": "output_dir",
            "def_val": "output",
        },
        {
            "type": ExperimentConfigTypes.EVAL_EVERY,
            "name": "eval_every",
            "conv_fct": Utils.StrToInt,
            "def_val": 0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.CHECKPOINT_EVERY,
            "name": "checkpoint_every",
            "conv_fct": Utils.StrToInt,
            "def_val": 1,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.BATCH_SIZE,
            "name": "batch_size",
            "conv_fct": Utils.StrToInt,
            "def_val": 4,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
    ],
    # Model
    "model": [
        {
            "type": ExperimentConfigTypes.ENC_LAYERS,
            "name": "enc_layers",
            "conv_fct": Utils.StrToInt,
            "def_val": 6,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.ENC_DIM,
            "name": "enc_dim",
            "conv_fct": Utils.StrToInt,
            "def_val": 1024,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.ENC_HEADS,
            "name": "enc_heads",
            "conv_fct": Utils.StrToInt,
            "def_val": 8,
            "valid_if": _ExperimentConfigUtils.AreEncoderHeadsValid,
        },
        {
            "type": ExperimentConfigTypes.POS_DIM,
            "name": "pos_dim",
            "conv_fct": Utils.StrToInt,
            "def_val": 8,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.DEC_LAYERS,
            "name": "dec_layers",
            "conv_fct": Utils.StrToInt,
            "def_val": 3,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.DEC_DIM,
            "name": "dec_dim",
            "conv_fct": Utils.StrToInt,
            "def_val": 1032,
            "valid_if": _ExperimentConfigUtils.IsDecoderDimValid,
        },
        {
            "type": ExperimentConfigTypes.DEC_HEADS,
            "name": "dec_heads",
            "conv_fct": Utils.StrToInt,
            "def_val": 4,
            "valid_if": _ExperimentConfigUtils.AreDecoderHeadsValid,
        },
        {
            "type": ExperimentConfigTypes.MASK_RATIO,
            "name": "mask_ratio",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.5,
            "valid_if": _ExperimentConfigUtils.IsOpenRatio,
        },
        {
            "type": ExperimentConfigTypes.PRETRAIN_EPOCHS,
            "name": "pretrain_epochs",
            "conv_fct": Utils.StrToInt,
            "def_val": 800,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.PRETRAIN_LR,
            "name": "pretrain_lr",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1e-4,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.FINETUNE_EPOCHS,
            "name": "finetune_epochs",
            "conv_fct": Utils.StrToInt,
            "def_val": 256,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.FINETUNE_LR,
            "name": "finetune_lr",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1e-3,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.LR_DECAY_FACTOR,
            "name": "lr_decay_factor",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.1,
            "valid_if": _ExperimentConfigUtils.IsOpenRatio,
        },
        {
            "type": ExperimentConfigTypes.LR_DECAY_AT,
            "name": "lr_decay_at",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.75,
            "valid_if": _ExperimentConfigUtils.IsOpenRatio,
        },
        {
            "type": ExperimentConfigTypes.LOSS_SCOPE,
            "name": "loss_scope",
            "conv_fct": LossScopeConverter.KeyToValue,
            "print_fct": lambda val: val.name.lower(),
            "def_val": LossScopeTypes.MASKED_ONLY,
        },
        {
            "type": ExperimentConfigTypes.COORD_DIM,
            "name": "coord_dim",
            "conv_fct": Utils.StrToInt,
            "def_val": 3,
            "valid_if": lambda cfg, val: val in (2, 3),
        },
        {
            "type": ExperimentConfigTypes.NUM_JOINTS,
            "name": "num_joints",
            "conv_fct": Utils.StrToInt,
            "def_val": 13,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.HISTORY_FRAMES,
            "name": "history_frames",
            "conv_fct": Utils.StrToInt,
            "def_val": 16,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.FUTURE_FRAMES,
            "name": "future_frames",
            "conv_fct": Utils.StrToInt,
            "def_val": 14,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.MAX_PERSONS,
            "name": "max_persons",
            "conv_fct": Utils.StrToInt,
            "def_val": 32,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.PAIR_EMB_DIM,
            "name": "pair_emb_dim",
            "conv_fct": Utils.StrToInt,
            "def_val": 16,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.NUM_POSE_ACTIONS,
            "name": "num_pose_actions",
            "conv_fct": Utils.StrToInt,
            "def_val": 10,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.NUM_INTERACTIONS,
            "name": "num_interactions",
            "conv_fct": Utils.StrToInt,
            "def_val": 14,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.ACTION_THRESHOLD,
            "name": "action_threshold",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.6,
            "valid_if": _ExperimentConfigUtils.IsOpenRatio,
        },
        {
            "type": ExperimentConfigTypes.FAR_DISTANCE,
            "name": "far_distance",
            "conv_fct": Utils.StrToFloat,
            "def_val": 10.0,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
    ],
    # Data
    "data": [
        {
            "type": ExperimentConfigTypes.DATASET_DIR,
            "name": "dataset_dir",
        },
        {
            "type": ExperimentConfigTypes.PRETRAIN_DATASET_DIR,
            "name": "pretrain_dataset_dir",
            "def_val": None,
        },
        {
            "type": ExperimentConfigTypes.EVAL_DATASET_DIR,
            "name": "eval_dataset_dir",
            "def_val": None,
        },
        {
            "type": ExperimentConfigTypes.DATA_FRACTION,
            "name": "data_fraction",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsFraction,
        },
        {
            "type": ExperimentConfigTypes.FINETUNE_FRACTION,
            "name": "finetune_fraction",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsFraction,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_NUM_SCENES,
            "name": "synth_num_scenes",
            "conv_fct": Utils.StrToInt,
            "def_val": 8,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_NUM_PERSONS,
            "name": "synth_num_persons",
            "conv_fct": Utils.StrToInt,
            "def_val": 4,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_NUM_FRAMES,
            "name": "synth_num_frames",
            "conv_fct": Utils.StrToInt,
            "def_val": None,
            "valid_if": lambda cfg, val: val is None or val > 0,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_NUM_GROUPS,
            "name": "synth_num_groups",
            "conv_fct": Utils.StrToInt,
            "def_val": 2,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_NOISE,
            "name": "synth_noise",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_FPS,
            "name": "synth_fps",
            "conv_fct": Utils.StrToFloat,
            "def_val": 15.0,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_OCCLUSION_PROB,
            "name": "synth_occlusion_prob",
            "conv_fct": Utils.StrToFloat,
            "def_val": 0.0,
            "valid_if": lambda cfg, val: 0.0 <= val <= 1.0,
        },
        {
            "type": ExperimentConfigTypes.SYNTH_PIXEL_SCALE,
            "name": "synth_pixel_scale",
            "conv_fct": Utils.StrToFloat,
            "def_val": 100.0,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
    ],
    # Loss
    "loss": [
        {
            "type": ExperimentConfigTypes.FORECAST_LAYER_WEIGHTS,
            "name": "forecast_layer_weights",
            "conv_fct": Utils.StrToFloatList,
            "print_fct": lambda val: "all 1.0" if val is None else Utils.ListToStr(val),
            "def_val": None,
            "valid_if": lambda cfg, val: val is None or len(val) == cfg.GetValue(ExperimentConfigTypes.ENC_LAYERS),
        },
        {
            "type": ExperimentConfigTypes.GROUP_LAMBDA_BCE,
            "name": "group_lambda_bce",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.GROUP_LAMBDA_EIG,
            "name": "group_lambda_eig",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.GROUP_LAMBDA_COUNT,
            "name": "group_lambda_count",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.EIG_ALPHA,
            "name": "eig_alpha",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.EIG_BETA,
            "name": "eig_beta",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.ACTION_LAMBDA_POSE,
            "name": "action_lambda_pose",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
        {
            "type": ExperimentConfigTypes.ACTION_LAMBDA_INTERACTION,
            "name": "action_lambda_interaction",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsNonNegative,
        },
    ],
    # Evaluation
    "eval": [
        {
            "type": ExperimentConfigTypes.GROUP_IOU_THRESHOLD,
            "name": "group_iou_threshold",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1.0,
            "valid_if": _ExperimentConfigUtils.IsFraction,
        },
        {
            "type": ExperimentConfigTypes.GROUP_USE_COUNT,
            "name": "group_use_count",
            "conv_fct": Utils.StrToBool,
            "def_val": False,
        },
        {
            "type": ExperimentConfigTypes.VIM_TIMESTEPS,
            "name": "vim_timesteps",
            "conv_fct": Utils.StrToIntList,
            "print_fct": Utils.ListToStr,
            "def_val": [2, 4, 8, 10, 14],
            "valid_if": _ExperimentConfigUtils.AreTimestepsValid,
        },
        {
            "type": ExperimentConfigTypes.MPJPE_HORIZONS,
            "name": "mpjpe_horizons",
            "conv_fct": Utils.StrToIntList,
            "print_fct": Utils.ListToStr,
            "def_val": [5, 10, 14],
            "valid_if": _ExperimentConfigUtils.AreTimestepsValid,
        },
        {
            "type": ExperimentConfigTypes.VIM_SCALE,
            "name": "vim_scale",
            "conv_fct": Utils.StrToFloat,
            "def_val": 1000.0,
            "valid_if": _ExperimentConfigUtils.IsPositive,
        },
    ],
    # Ablation
    "ablation": [
        {
            "type": ExperimentConfigTypes.ABLATION_AXIS,
            "name": "ablation_axis",
            "conv_fct": AblationAxisConverter.KeyToValue,
            "print_fct": lambda val: "none" if val is None else val.name.lower(),
            "def_val": None,
        },
        {
            "type": ExperimentConfigTypes.ABLATION_VALUES,
            "name": "ablation_values",
            "conv_fct": Utils.StrToFloatList,
            "print_fct": Utils.ListToStr,
            "def_val": [],
            "load_if": lambda cfg: cfg.GetValue(ExperimentConfigTypes.ABLATION_AXIS) is not None,
        },
    ],
    # Logging
    "logging": [
        {
            "type": ExperimentConfigTypes.LOG_LEVEL,
            "name": "log_level",
            "conv_fct": LoggingLevelConverter.KeyToValue,
            "print_fct": LoggingLevelConverter.ValueToKey,
            "def_val": logging.INFO,
        },
        {
            "type": ExperimentConfigTypes.LOG_CONSOLE_ENABLED,
            "name": "log_console_enabled",
            "conv_fct": Utils.StrToBool,
            "def_val": True,
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_ENABLED,
            "name": "log_file_enabled",
            "conv_fct": Utils.StrToBool,
            "def_val": False,
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_NAME,
            "name": "log_file_name",
            "def_val": "logs/social_mae.log",
            "load_if": lambda cfg: cfg.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED),
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_USE_ROTATING,
            "name": "log_file_use_rotating",
            "conv_fct": Utils.StrToBool,
            "def_val": False,
            "load_if": lambda cfg: cfg.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED),
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_APPEND,
            "name": "log_file_append",
            "conv_fct": Utils.StrToBool,
            "def_val": True,
            "load_if": lambda cfg: (cfg.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED) and
                                    not cfg.GetValue(ExperimentConfigTypes.LOG_FILE_USE_ROTATING)),
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_MAX_BYTES,
            "name": "log_file_max_bytes",
            "conv_fct": Utils.StrToInt,
            "def_val": 5242880,
            "load_if": lambda cfg: (cfg.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED) and
                                    cfg.GetValue(ExperimentConfigTypes.LOG_FILE_USE_ROTATING)),
        },
        {
            "type": ExperimentConfigTypes.LOG_FILE_BACKUP_CNT,
            "name": "log_file_backup_cnt",
            "conv_fct": Utils.StrToInt,
            "def_val": 10,
            "load_if": lambda cfg: (cfg.GetValue(ExperimentConfigTypes.LOG_FILE_ENABLED) and
                                    cfg.GetValue(ExperimentConfigTypes.LOG_FILE_USE_ROTATING)),
        },
    ],
}
