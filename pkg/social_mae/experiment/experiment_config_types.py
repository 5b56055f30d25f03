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
from enum import auto, unique

from social_mae.config.config_object import ConfigTypes


#
# Enumerations
#

# Experiment configuration types
@unique
class ExperimentConfigTypes(ConfigTypes):
    # Experiment
    TASK = auto()
    SEED = auto()
    OUTPUT_DIR = auto()
    EVAL_EVERY = auto()
    CHECKPOINT_EVERY = auto()
    BATCH_SIZE = auto()
    # Model
    ENC_LAYERS = auto()
    ENC_HEADS = auto()
    ENC_DIM = auto()
    DEC_LAYERS = auto()
    DEC_HEADS = auto()
    DEC_DIM = auto()
    MASK_RATIO = auto()
    PRETRAIN_EPOCHS = auto()
    PRETRAIN_LR = auto()
    FINETUNE_EPOCHS = auto()
    FINETUNE_LR = auto()
    LR_DECAY_FACTOR = auto()
    LR_DECAY_AT = auto()
    LOSS_SCOPE = auto()
    COORD_DIM = auto()
    NUM_JOINTS = auto()
    HISTORY_FRAMES = auto()
    FUTURE_FRAMES = auto()
    MAX_PERSONS = auto()
    POS_DIM = auto()
    PAIR_EMB_DIM = auto()
    NUM_POSE_ACTIONS = auto()
    NUM_INTERACTIONS = auto()
    ACTION_THRESHOLD = auto()
    FAR_DISTANCE = auto()
    # Data
    DATASET_DIR = auto()
    PRETRAIN_DATASET_DIR = auto()
    EVAL_DATASET_DIR = auto()
    DATA_FRACTION = auto()
    FINETUNE_FRACTION = auto()
    SYNTH_NUM_SCENES = auto()
    SYNTH_NUM_PERSONS = auto()
    SYNTH_NUM_FRAMES = auto()
    SYNTH_NUM_GROUPS = auto()
    SYNTH_NOISE = auto()
    SYNTH_FPS = auto()
    SYNTH_OCCLUSION_PROB = auto()
    SYNTH_PIXEL_SCALE = auto()
    # Loss
    FORECAST_LAYER_WEIGHTS = auto()
    GROUP_LAMBDA_BCE = auto()
    GROUP_LAMBDA_EIG = auto()
    GROUP_LAMBDA_COUNT = auto()
    EIG_ALPHA = auto()
    EIG_BETA = auto()
    ACTION_LAMBDA_POSE = auto()
    ACTION_LAMBDA_INTERACTION = auto()
    # Evaluation
    GROUP_IOU_THRESHOLD = auto()
    GROUP_USE_COUNT = auto()
    VIM_TIMESTEPS = auto()
    MPJPE_HORIZONS = auto()
    VIM_SCALE = auto()
    # Ablation
    ABLATION_AXIS = auto()
    ABLATION_VALUES = auto()
    # Logging
    LOG_LEVEL = auto()
    LOG_CONSOLE_ENABLED = auto()
    LOG_FILE_ENABLED = auto()
    LOG_FILE_NAME = auto()
    LOG_FILE_USE_ROTATING = auto()
    LOG_FILE_APPEND = auto()
    LOG_FILE_MAX_BYTES = auto()
    LOG_FILE_BACKUP_CNT = auto()
