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
from __future__ import annotations

from typing import Any, Dict

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.model.loss_scope_types import LossScopeTypes
from social_mae.model.model_ex import ModelArgumentError


#
# Classes
#

# Architecture and schedule hyperparameters.
# Defaults are the full-scale values; toy runs override them from the configuration file.
class ModelConfig:

    enc_layers: int
    enc_heads: int
    enc_dim: int
    dec_layers: int
    dec_heads: int
    dec_dim: int
    mask_ratio: float
    pretrain_epochs: int
    pretrain_lr: float
    finetune_epochs: int
    finetune_lr: float
    lr_decay_factor: float
    loss_scope: LossScopeTypes
    coord_dim: int
    num_joints: int
    history_frames: int
    future_frames: int
    max_persons: int
    pos_dim: int
    pair_emb_dim: int
    num_pose_actions: int
    num_interactions: int
    action_threshold: float
    far_distance: float
    decay_at: float

    # Constructor
    def __init__(self,
                 enc_layers: int = 6,
                 enc_heads: int = 8,
                 enc_dim: int = 1024,
                 dec_layers: int = 3,
                 dec_heads: int = 4,
                 dec_dim: int = 1032,
                 mask_ratio: float = 0.5,
                 pretrain_epochs: int = 800,
                 pretrain_lr: float = 1e-4,
                 finetune_epochs: int = 256,
                 finetune_lr: float = 1e-3,
                 lr_decay_factor: float = 0.1,
                 loss_scope: LossScopeTypes = LossScopeTypes.MASKED_ONLY,
                 coord_dim: int = 3,
                 num_joints: int = 13,
                 history_frames: int = 16,
                 future_frames: int = 14,
                 max_persons: int = 32,
                 pos_dim: int = 8,
                 pair_emb_dim: int = 16,
                 num_pose_actions: int = 10,
                 num_interactions: int = 14,
                 action_threshold: float = 0.6,
                 far_distance: float = 10.0,
                 decay_at: float = 0.75) -> None:
        self.enc_layers = enc_layers
        self.enc_heads = enc_heads
        self.enc_dim = enc_dim
        self.dec_layers = dec_layers
        self.dec_heads = dec_heads
        self.dec_dim = dec_dim
        self.mask_ratio = mask_ratio
        self.pretrain_epochs = pretrain_epochs
        self.pretrain_lr = pretrain_lr
        self.finetune_epochs = finetune_epochs
        self.finetune_lr = finetune_lr
        self.lr_decay_factor = lr_decay_factor
        self.loss_scope = loss_scope
        self.coord_dim = coord_dim
        self.num_joints = num_joints
        self.history_frames = history_frames
        self.future_frames = future_frames
        self.max_persons = max_persons
        self.pos_dim = pos_dim
        self.pair_emb_dim = pair_emb_dim
        self.num_pose_actions = num_pose_actions
        self.num_interactions = num_interactions
        self.action_threshold = action_threshold
        self.far_distance = far_distance
        self.decay_at = decay_at
        self.Validate()

    # Construct from experiment configuration
    @classmethod
    def FromConfig(cls,
                   config: ConfigObject) -> ModelConfig:
        return cls(enc_layers=config.GetValue(ExperimentConfigTypes.ENC_LAYERS),
                   enc_heads=config.GetValue(ExperimentConfigTypes.ENC_HEADS),
                   enc_dim=config.GetValue(ExperimentConfigTypes.ENC_DIM),
                   dec_layers=config.GetValue(ExperimentConfigTypes.DEC_LAYERS),
                   dec_heads=config.GetValue(ExperimentConfigTypes.DEC_HEADS),
                   dec_dim=config.GetValue(ExperimentConfigTypes.DEC_DIM),
                   mask_ratio=config.GetValue(ExperimentConfigTypes.MASK_RATIO),
                   pretrain_epochs=config.GetValue(ExperimentConfigTypes.PRETRAIN_EPOCHS),
                   pretrain_lr=config.GetValue(ExperimentConfigTypes.PRETRAIN_LR),
                   finetune_epochs=config.GetValue(ExperimentConfigTypes.FINETUNE_EPOCHS),
                   finetune_lr=config.GetValue(ExperimentConfigTypes.FINETUNE_LR),
                   lr_decay_factor=config.GetValue(ExperimentConfigTypes.LR_DECAY_FACTOR),
                   loss_scope=config.GetValue(ExperimentConfigTypes.LOSS_SCOPE),
                   coord_dim=config.GetValue(ExperimentConfigTypes.COORD_DIM),
                   num_joints=config.GetValue(ExperimentConfigTypes.NUM_JOINTS),
                   history_frames=config.GetValue(ExperimentConfigTypes.HISTORY_FRAMES),
                   future_frames=config.GetValue(ExperimentConfigTypes.FUTURE_FRAMES),
                   max_persons=config.GetValue(ExperimentConfigTypes.MAX_PERSONS),
                   pos_dim=config.GetValue(ExperimentConfigTypes.POS_DIM),
                   pair_emb_dim=config.GetValue(ExperimentConfigTypes.PAIR_EMB_DIM),
                   num_pose_actions=config.GetValue(ExperimentConfigTypes.NUM_POSE_ACTIONS),
                   num_interactions=config.GetValue(ExperimentConfigTypes.NUM_INTERACTIONS),
                   action_threshold=config.GetValue(ExperimentConfigTypes.ACTION_THRESHOLD),
                   far_distance=config.GetValue(ExperimentConfigTypes.FAR_DISTANCE),
                   decay_at=config.GetValue(ExperimentConfigTypes.LR_DECAY_AT))

    # Construct from dictionary (checkpoints)
    @classmethod
    def FromDict(cls,
                 values: Dict[str, Any]) -> ModelConfig:
        values = dict(values)
        values["loss_scope"] = LossScopeTypes[values["loss_scope"]]
        return cls(**values)

    # Convert to dictionary
    def ToDict(self) -> Dict[str, Any]:
        values = dict(vars(self))
        values["loss_scope"] = self.loss_scope.name
        return values

    # Get the fields that fix the encoder architecture
    def EncoderSignature(self) -> Dict[str, Any]:
        return {
            "enc_layers": self.enc_layers,
            "enc_heads": self.enc_heads,
            "enc_dim": self.enc_dim,
            "coord_dim": self.coord_dim,
            "num_joints": self.num_joints,
            "history_frames": self.history_frames,
            "max_persons": self.max_persons,
            "pos_dim": self.pos_dim,
        }

    # Validate
    def Validate(self) -> None:
        positive = ("enc_layers", "enc_heads", "enc_dim", "dec_layers", "dec_heads", "dec_dim",
                    "pretrain_epochs", "finetune_epochs", "num_joints", "history_frames", "future_frames",
                    "max_persons", "pos_dim", "pair_emb_dim", "num_pose_actions", "num_interactions")
        for name in positive:
            if getattr(self, name) <= 0:
                raise ModelArgumentError(f"{name} shall be positive, got {getattr(self, name)}")
        for name in ("mask_ratio", "lr_decay_factor", "action_threshold", "decay_at"):
            if not 0.0 < getattr(self, name) < 1.0:
                raise ModelArgumentError(f"{name} shall be in (0, 1), got {getattr(self, name)}")
        if self.pretrain_lr < 0 or self.finetune_lr < 0:
            raise ModelArgumentError("Learning rates shall be non-negative")
        if self.far_distance <= 0:
            raise ModelArgumentError(f"far_distance shall be positive, got {self.far_distance}")
        if self.coord_dim not in (2, 3):
            raise ModelArgumentError(f"coord_dim shall be 2 or 3, got {self.coord_dim}")
        if self.enc_dim % self.enc_heads != 0:
            raise ModelArgumentError(f"enc_dim ({self.enc_dim}) shall be divisible by enc_heads ({self.enc_heads})")
        if self.dec_dim % self.dec_heads != 0:
            raise ModelArgumentError(f"dec_dim ({self.dec_dim}) shall be divisible by dec_heads ({self.dec_heads})")
        if self.dec_dim <= self.pos_dim:
            raise ModelArgumentError(f"dec_dim ({self.dec_dim}) shall be greater than pos_dim ({self.pos_dim})")

    # Equality
    def __eq__(self,
               other: object) -> bool:
        return isinstance(other, ModelConfig) and self.ToDict() == other.ToDict()

    __hash__ = None  # type: ignore[assignment]
