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
import numpy as np

from social_mae.codec.coefficient_block import CoefficientBlock
from social_mae.scene.centered_scene import CenteredScene
from social_mae.token.token_batch import TokenBatch
from social_mae.token.token_ex import TokenArgumentError


#
# Classes
#

# Token builder class
class TokenBuilder:
    # Build one token per (person, joint)
    @staticmethod
    def Build(centered: CenteredScene,
              block: CoefficientBlock) -> TokenBatch:
        scene = centered.scene
        n, j, t, c = scene.trajectories.shape
        if block.coeffs.shape != (n, j, c, t):
            raise TokenArgumentError(
                f"Coefficient block shape {block.coeffs.shape} does not match scene shape {(n, j, c, t)}"
            )
        if centered.global_offsets.shape != (n, c):
            raise TokenArgumentError(
                f"Global offsets shape {centered.global_offsets.shape} does not match {(n, c)}"
            )

        return TokenBatch(content=block.coeffs.reshape(n * j, c * t).copy(),
                          joint_type_index=np.tile(np.arange(j, dtype=np.int64), n),
                          person_index=np.repeat(np.arange(n, dtype=np.int64), j),
                          global_offset=np.repeat(centered.global_offsets, j, axis=0),
                          token_index=np.arange(n * j, dtype=np.int64),
                          padding=np.repeat(scene.padding, j),
                          coord_dim=c,
                          num_frames=t)
