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

from typing import Sequence, Union

import numpy as np

from social_mae.token.token_ex import TokenArgumentError


#
# Classes
#

# Per-(person, joint) trajectory tokens.
# Token k of a full batch is (person k // J, joint k % J); content rows hold coord_dim * T coefficients, axis-major.
# Views keep the original token index in token_index.
class TokenBatch:

    content: np.ndarray
    joint_type_index: np.ndarray
    person_index: np.ndarray
    global_offset: np.ndarray
    token_index: np.ndarray
    padding: np.ndarray
    coord_dim: int
    num_frames: int

    # Constructor
    def __init__(self,
                 content: np.ndarray,
                 joint_type_index: np.ndarray,
                 person_index: np.ndarray,
                 global_offset: np.ndarray,
                 token_index: np.ndarray,
                 padding: np.ndarray,
                 coord_dim: int,
                 num_frames: int) -> None:
        self.content = content
        self.joint_type_index = joint_type_index
        self.person_index = person_index
        self.global_offset = global_offset
        self.token_index = token_index
        self.padding = padding
        self.coord_dim = coord_dim
        self.num_frames = num_frames

    # Get number of tokens
    def NumTokens(self) -> int:
        return self.content.shape[0]

    # Get a view restricted to the given tokens, in the given order
    def IndexView(self,
                  indexes: Union[Sequence[int], np.ndarray]) -> TokenBatch:
        idx = np.asarray(indexes, dtype=np.int64).reshape(-1)
        if idx.size > 0 and (idx.min() < 0 or idx.max() >= self.NumTokens()):
            raise TokenArgumentError(f"Token indexes out of range [0, {self.NumTokens()})")
        return TokenBatch(self.content[idx].copy(),
                          self.joint_type_index[idx],
                          self.person_index[idx],
                          self.global_offset[idx],
                          self.token_index[idx],
                          self.padding[idx],
                          self.coord_dim,
                          self.num_frames)

    # Get a view with tokens reordered
    def Permute(self,
                order: Union[Sequence[int], np.ndarray]) -> TokenBatch:
        order_arr = np.asarray(order, dtype=np.int64)
        if sorted(order_arr.tolist()) != list(range(self.NumTokens())):
            raise TokenArgumentError("Token order shall be a permutation")
        return self.IndexView(order_arr)
