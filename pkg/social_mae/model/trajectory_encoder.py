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

from social_mae.model.attention_block import AttentionBlock
from social_mae.model.model_config import ModelConfig
from social_mae.model.model_ex import ModelArgumentError, ModelNumericError
from social_mae.model.token_tensors import TokenTensors


#
# Classes
#

# Trajectory token encoder.
# Input token = fuse(concat(content_proj(coeffs) + joint_emb + identity_emb, global_pos(offset))),
# followed by enc_layers attention blocks over the tokens of all persons.
class TrajectoryEncoder(nn.Module):

    config: ModelConfig
    content_proj: nn.Linear
    joint_emb: nn.Embedding
    identity_emb: nn.Embedding
    global_pos: nn.Linear
    fuse: nn.Linear
    blocks: nn.ModuleList

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.content_proj = nn.Linear(config.coord_dim * config.history_frames, config.enc_dim)
        self.joint_emb = nn.Embedding(config.num_joints, config.enc_dim)
        self.identity_emb = nn.Embedding(config.max_persons, config.enc_dim)
        self.global_pos = nn.Linear(config.coord_dim, config.pos_dim)
        self.fuse = nn.Linear(config.enc_dim + config.pos_dim, config.enc_dim)
        self.blocks = nn.ModuleList([
            AttentionBlock(config.enc_dim, config.enc_heads) for _ in range(config.enc_layers)
        ])

    # Forward: returns [L + 1, K, enc_dim]
    def forward(self,
                tokens: TokenTensors) -> torch.Tensor:
        self.__CheckTokens(tokens)

        x = self.content_proj(tokens.content) + self.joint_emb(tokens.joint_type_index) + \
            self.identity_emb(tokens.person_index)
        x = self.fuse(torch.cat([x, self.global_pos(tokens.global_offset)], dim=-1))

        layers = [x]
        for i, block in enumerate(self.blocks):
            x = block(x, tokens.padding)
            if not bool(torch.isfinite(x).all()):
                raise ModelNumericError(f"Non-finite activations at encoder layer {i + 1}")
            layers.append(x)
        return torch.stack(layers)

    # Check tokens
    def __CheckTokens(self,
                      tokens: TokenTensors) -> None:
        if tokens.content is None or tokens.NumTokens() < 1:
            raise ModelArgumentError("Encoder needs at least one visible token with content")
        expected = self.config.coord_dim * self.config.history_frames
        if tokens.content.shape[1] != expected:
            raise ModelArgumentError(f"Token content width {tokens.content.shape[1]} does not match {expected}")
        if not bool(torch.isfinite(tokens.content).all()):
            raise ModelNumericError("Non-finite activations at encoder layer 0 (token content)")
        if int(tokens.person_index.max()) >= self.config.max_persons:
            raise ModelArgumentError(
                f"Person index {int(tokens.person_index.max())} exceeds max_persons ({self.config.max_persons})"
            )
        if int(tokens.joint_type_index.max()) >= self.config.num_joints:
            raise ModelArgumentError(
                f"Joint index {int(tokens.joint_type_index.max())} exceeds num_joints ({self.config.num_joints})"
            )
