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

from typing import Optional

import torch

from social_mae.token.token_batch import TokenBatch


#
# Classes
#

# Tensor form of a token batch.
# Content is left out when only slot descriptors are needed (decoder side).
class TokenTensors:

    content: Optional[torch.Tensor]
    joint_type_index: torch.Tensor
    person_index: torch.Tensor
    global_offset: torch.Tensor
    padding: torch.Tensor

    # Constructor
    def __init__(self,
                 content: Optional[torch.Tensor],
                 joint_type_index: torch.Tensor,
                 person_index: torch.Tensor,
                 global_offset: torch.Tensor,
                 padding: torch.Tensor) -> None:
        self.content = content
        self.joint_type_index = joint_type_index
        self.person_index = person_index
        self.global_offset = global_offset
        self.padding = padding

    # Construct from a token batch
    @classmethod
    def FromBatch(cls,
                  batch: TokenBatch,
                  dtype: torch.dtype,
                  with_content: bool = True) -> TokenTensors:
        return cls(torch.as_tensor(batch.content, dtype=dtype) if with_content else None,
                   torch.as_tensor(batch.joint_type_index, dtype=torch.long),
                   torch.as_tensor(batch.person_index, dtype=torch.long),
                   torch.as_tensor(batch.global_offset, dtype=dtype),
                   torch.as_tensor(batch.padding, dtype=torch.bool))

    # Get number of tokens
    def NumTokens(self) -> int:
        return self.joint_type_index.shape[0]
