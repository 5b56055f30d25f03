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

from social_mae.token.token_batch import TokenBatch


#
# Classes
#

# Encoder latents at every depth: [L + 1, K_visible, enc_dim] (input embedding, then each layer output)
class LatentBatch:

    layers: torch.Tensor
    tokens: TokenBatch

    # Constructor
    def __init__(self,
                 layers: torch.Tensor,
                 tokens: TokenBatch) -> None:
        self.layers = layers
        self.tokens = tokens

    # Get number of encoder layers L
    def NumLayers(self) -> int:
        return self.layers.shape[0] - 1

    # Get number of encoded tokens
    def NumTokens(self) -> int:
        return self.layers.shape[1]

    # Get latents of a layer (0 = input embedding)
    def Layer(self,
              idx: int) -> torch.Tensor:
        return self.layers[idx]

    # Get final layer latents
    def Final(self) -> torch.Tensor:
        return self.layers[-1]

    # Mean-pool the final layer over each person's tokens: [num_persons, enc_dim]
    def PoolPersons(self,
                    num_persons: int) -> torch.Tensor:
        final = self.Final()
        person_index = torch.as_tensor(self.tokens.person_index, dtype=torch.long)
        sums = final.new_zeros((num_persons, final.shape[1])).index_add(0, person_index, final)
        counts = final.new_zeros(num_persons).index_add(0, person_index, torch.ones_like(final[:, 0]))
        return sums / counts.clamp(min=1.0)[:, None]
