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
from typing import Tuple

import numpy as np

from social_mae.token.mask_plan import MaskPlan
from social_mae.token.token_batch import TokenBatch
from social_mae.token.token_ex import TokenArgumentError
from social_mae.utils.utils import Utils


#
# Classes
#

# Tube mask sampler class.
# A token is a whole joint trajectory, so masking a token hides the full tube.
class TubeMaskSampler:
    # Sample a uniformly random plan of exactly round-half-up(ratio * K) masked tokens
    @staticmethod
    def Sample(num_tokens: int,
               ratio: float,
               seed: int) -> MaskPlan:
        if not 0.0 < ratio < 1.0:
            raise TokenArgumentError(f"Mask ratio shall be in (0, 1), got {ratio}")
        if num_tokens < 2:
            raise TokenArgumentError(f"At least 2 tokens are needed for masking, got {num_tokens}")
        num_masked = TubeMaskSampler.NumMasked(num_tokens, ratio)
        if not 1 <= num_masked <= num_tokens - 1:
            raise TokenArgumentError(
                f"Masking {num_masked} of {num_tokens} tokens leaves an empty masked or visible set"
            )

        rng = np.random.default_rng(seed)
        masked = np.sort(rng.choice(num_tokens, size=num_masked, replace=False))
        return MaskPlan(num_tokens, masked, ratio)

    # Get number of masked tokens for a ratio
    @staticmethod
    def NumMasked(num_tokens: int,
                  ratio: float) -> int:
        # Products such as 0.55 * 20 come out as 11.000000000000002
        return Utils.RoundHalfUp(round(ratio * num_tokens, 9))

    # Split a batch into its visible view and the masked slot list
    @staticmethod
    def Apply(batch: TokenBatch,
              plan: MaskPlan) -> Tuple[TokenBatch, np.ndarray]:
        if plan.num_tokens != batch.NumTokens():
            raise TokenArgumentError(
                f"Mask plan is for {plan.num_tokens} tokens, batch has {batch.NumTokens()}"
            )
        return batch.IndexView(plan.visible), plan.masked.copy()
