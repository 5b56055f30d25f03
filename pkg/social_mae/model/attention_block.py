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
from typing import Optional

import torch
from torch import nn


#
# Classes
#

# Constants for attention block class
class AttentionBlockConst:
    # Hidden size of the feed-forward part, relative to the model width
    MLP_RATIO: int = 4


# Pre-norm transformer block: full self-attention over all tokens, no causal masking
class AttentionBlock(nn.Module):

    norm1: nn.LayerNorm
    attn: nn.MultiheadAttention
    norm2: nn.LayerNorm
    mlp: nn.Sequential

    # Constructor
    def __init__(self,
                 dim: int,
                 num_heads: int) -> None:
        super().__init__()
        self.norm1 = nn.LayerNorm(dim)
        self.attn = nn.MultiheadAttention(dim, num_heads, dropout=0.0, batch_first=True)
        self.norm2 = nn.LayerNorm(dim)
        self.mlp = nn.Sequential(
            nn.Linear(dim, dim * AttentionBlockConst.MLP_RATIO),
            nn.GELU(),
            nn.Linear(dim * AttentionBlockConst.MLP_RATIO, dim),
        )

    # Forward: x is [K, dim], key_padding_mask is [K] (true = ignored as key)
    def forward(self,
                x: torch.Tensor,
                key_padding_mask: Optional[torch.Tensor] = None) -> torch.Tensor:
        h = self.norm1(x).unsqueeze(0)
        mask = None
        if key_padding_mask is not None and bool(key_padding_mask.any()) and not bool(key_padding_mask.all()):
            mask = key_padding_mask.unsqueeze(0)
        attn_out, _ = self.attn(h, h, h, key_padding_mask=mask, need_weights=False)
        x = x + attn_out.squeeze(0)
        return x + self.mlp(self.norm2(x))
