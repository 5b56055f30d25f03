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
from typing import List

import torch
from torch import nn
from torch.nn import functional as F

from social_mae.heads.group_prediction import GroupPrediction
from social_mae.heads.pair_geometry import PairGeometry
from social_mae.model.latent_batch import LatentBatch
from social_mae.model.model_config import ModelConfig
from social_mae.scene.scene import Scene


#
# Classes
#

# Constants for group head class
class GroupHeadConst:
    # Pair MLP layer sizes
    MATRIX_SIZES: List[int] = [16, 32, 128, 64, 8, 1]
    # Count MLP branch sizes (embedding branch and geometric branch)
    COUNT_BRANCH_SIZES: List[int] = [8, 16]
    # Count MLP sizes after concatenating the branches
    COUNT_SIZES: List[int] = [16, 8, 1]


# Social grouping head.
# Pair features: [proj(|z_i - z_j|), pelvis trajectory distance, GIoU distance (2D scenes only)].
class GroupHead(nn.Module):

    config: ModelConfig
    use_giou: bool
    pair_proj: nn.Linear
    matrix_mlp: nn.Sequential
    count_emb_branch: nn.Sequential
    count_geo_branch: nn.Sequential
    count_mlp: nn.Sequential

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.use_giou = config.coord_dim == 2
        # No bias: the self-pair embedding feature stays exactly zero
        self.pair_proj = nn.Linear(config.enc_dim, config.pair_emb_dim, bias=False)
        self.matrix_mlp = GroupHead.__Mlp(self.NumFeatures(), GroupHeadConst.MATRIX_SIZES)
        self.count_emb_branch = GroupHead.__Mlp(config.pair_emb_dim, GroupHeadConst.COUNT_BRANCH_SIZES)
        self.count_geo_branch = GroupHead.__Mlp(1, GroupHeadConst.COUNT_BRANCH_SIZES)
        self.count_mlp = GroupHead.__Mlp(2 * GroupHeadConst.COUNT_BRANCH_SIZES[-1], GroupHeadConst.COUNT_SIZES)

    # Get number of pair features
    def NumFeatures(self) -> int:
        return self.config.pair_emb_dim + 1 + int(self.use_giou)

    # Pair features [N, N, F] from the pooled final-layer latents and the raw history
    def PairwiseFeatures(self,
                         latents: LatentBatch,
                         history: Scene) -> torch.Tensor:
        pooled = latents.PoolPersons(history.NumPersons())
        emb = self.pair_proj((pooled[:, None, :] - pooled[None, :, :]).abs())
        geo = [torch.as_tensor(PairGeometry.TrajectoryDistance(history, self.config.far_distance), dtype=emb.dtype)]
        if self.use_giou:
            geo.append(torch.as_tensor(PairGeometry.GiouDistance(history, self.config.far_distance), dtype=emb.dtype))
        return torch.cat([emb] + [g[..., None] for g in geo], dim=-1)

    # Soft adjacency: per-pair MLP with sigmoid, symmetrized, unit diagonal
    def PredictMatrix(self,
                      features: torch.Tensor) -> torch.Tensor:
        adjacency = torch.sigmoid(self.matrix_mlp(features).squeeze(-1))
        adjacency = (adjacency + adjacency.T) / 2.0
        eye = torch.eye(adjacency.shape[0], dtype=adjacency.dtype)
        return adjacency * (1.0 - eye) + eye

    # Group count regression from pooled embedding and geometric distances over real-person pairs
    def PredictCount(self,
                     features: torch.Tensor,
                     real_persons: torch.Tensor) -> torch.Tensor:
        real = features.index_select(0, real_persons).index_select(1, real_persons)
        n = real.shape[0]
        # The last feature is the GIoU distance for 2D scenes, the trajectory distance otherwise
        emb, geo = real[..., :self.config.pair_emb_dim], real[..., -1:]
        if n < 2:
            emb_pooled, geo_pooled = emb.new_zeros(emb.shape[-1]), geo.new_zeros(1)
        else:
            off_diag = (1.0 - torch.eye(n, dtype=real.dtype))[..., None]
            emb_pooled = (emb * off_diag).sum(dim=(0, 1)) / (n * (n - 1))
            geo_pooled = (geo * off_diag).sum(dim=(0, 1)) / (n * (n - 1))
        hidden = torch.cat([self.count_emb_branch(emb_pooled), self.count_geo_branch(geo_pooled)])
        return F.softplus(self.count_mlp(hidden)).squeeze(-1)

    # Forward
    def forward(self,
                latents: LatentBatch,
                history: Scene) -> GroupPrediction:
        features = self.PairwiseFeatures(latents, history)
        real_persons = history.RealPersons()
        return GroupPrediction(self.PredictMatrix(features),
                               self.PredictCount(features, torch.as_tensor(real_persons, dtype=torch.long)),
                               real_persons)

    # Build a ReLU MLP
    @staticmethod
    def __Mlp(in_size: int,
              sizes: List[int]) -> nn.Sequential:
        layers: List[nn.Module] = []
        for i, size in enumerate(sizes):
            layers.append(nn.Linear(in_size if i == 0 else sizes[i - 1], size))
            if i < len(sizes) - 1:
                layers.append(nn.ReLU())
        return nn.Sequential(*layers)
