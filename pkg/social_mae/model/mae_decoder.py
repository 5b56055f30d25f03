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
import torch
from torch import nn

from social_mae.codec.dct_matrix import DctMatrix
from social_mae.model.attention_block import AttentionBlock
from social_mae.model.model_config import ModelConfig
from social_mae.model.token_tensors import TokenTensors


#
# Classes
#

# Shallow reconstruction decoder.
# Visible slots carry proj(latent), masked slots the shared mask token; both get their own joint/identity
# embeddings and the concatenated global-position embedding (dec_dim = proj width + pos_dim).
class MaeDecoder(nn.Module):

    config: ModelConfig
    latent_norm: nn.LayerNorm
    proj: nn.Linear
    mask_token: nn.Parameter
    joint_emb: nn.Embedding
    identity_emb: nn.Embedding
    global_pos: nn.Linear
    blocks: nn.ModuleList
    norm: nn.LayerNorm
    head: nn.Linear

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        width = config.dec_dim - config.pos_dim
        self.latent_norm = nn.LayerNorm(config.enc_dim)
        self.proj = nn.Linear(config.enc_dim, width)
        self.mask_token = nn.Parameter(torch.zeros(config.dec_dim))
        self.joint_emb = nn.Embedding(config.num_joints, width)
        self.identity_emb = nn.Embedding(config.max_persons, width)
        self.global_pos = nn.Linear(config.coord_dim, config.pos_dim)
        self.blocks = nn.ModuleList([
            AttentionBlock(config.dec_dim, config.dec_heads) for _ in range(config.dec_layers)
        ])
        self.norm = nn.LayerNorm(config.dec_dim)
        self.head = nn.Linear(config.dec_dim, config.coord_dim * config.history_frames)

    # Forward: visible latents [K_visible, enc_dim] placed at the visible slots of K slots.
    # Returns Cartesian trajectories [K, coord_dim * T], axis-major.
    def forward(self,
                visible_latents: torch.Tensor,
                slots: TokenTensors,
                visible: torch.Tensor,
                masked: torch.Tensor) -> torch.Tensor:
        num_slots = slots.NumTokens()
        width = self.config.dec_dim - self.config.pos_dim

        content = visible_latents.new_zeros((num_slots, width))
        content = content.index_copy(0, visible, self.proj(self.latent_norm(visible_latents)))
        x = content + self.joint_emb(slots.joint_type_index) + self.identity_emb(slots.person_index)
        x = torch.cat([x, self.global_pos(slots.global_offset)], dim=-1)

        is_masked = x.new_zeros(num_slots).index_fill(0, masked, 1.0)
        x = x + is_masked[:, None] * self.mask_token[None, :]

        for block in self.blocks:
            x = block(x, slots.padding)
        coeffs = self.head(self.norm(x))

        c, t = self.config.coord_dim, self.config.history_frames
        return DctMatrix.InverseTorch(coeffs.reshape(num_slots, c, t)).reshape(num_slots, c * t)
