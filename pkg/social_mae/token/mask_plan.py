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

from typing import Sequence

import numpy as np

from social_mae.token.token_ex import TokenArgumentError


#
# Classes
#

# Tube mask plan: masked tokens and their complement, both sorted
class MaskPlan:

    num_tokens: int
    masked: np.ndarray
    visible: np.ndarray
    ratio: float

    # Constructor
    def __init__(self,
                 num_tokens: int,
                 masked: np.ndarray,
                 ratio: float) -> None:
        self.num_tokens = num_tokens
        self.masked = np.asarray(masked, dtype=np.int64)
        self.visible = np.setdiff1d(np.arange(num_tokens, dtype=np.int64), self.masked)
        self.ratio = ratio

    # Build a plan from an explicit masked set (may be empty)
    @classmethod
    def FromMasked(cls,
                   num_tokens: int,
                   masked: Sequence[int]) -> MaskPlan:
        masked_arr = np.unique(np.asarray(masked, dtype=np.int64))
        if len(masked_arr) != len(masked):
            raise TokenArgumentError("Masked token indexes shall be unique")
        if masked_arr.size > 0 and (masked_arr[0] < 0 or masked_arr[-1] >= num_tokens):
            raise TokenArgumentError(f"Masked token indexes out of range [0, {num_tokens})")
        return cls(num_tokens, masked_arr, len(masked_arr) / num_tokens if num_tokens > 0 else 0.0)

    # Build a plan that masks nothing
    @classmethod
    def Empty(cls,
              num_tokens: int) -> MaskPlan:
        return cls.FromMasked(num_tokens, [])

    # Get number of masked tokens
    def NumMasked(self) -> int:
        return self.masked.size

    # Get number of visible tokens
    def NumVisible(self) -> int:
        return self.visible.size

    # Get boolean mask over all tokens
    def MaskedFlags(self) -> np.ndarray:
        flags = np.zeros(self.num_tokens, dtype=bool)
        flags[self.masked] = True
        return flags
