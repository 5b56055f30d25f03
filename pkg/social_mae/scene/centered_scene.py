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

from social_mae.scene.scene import Scene


#
# Classes
#

# Pelvis-centered scene with the per-person offsets that were removed
class CenteredScene:

    scene: Scene
    global_offsets: np.ndarray

    # Constructor
    def __init__(self,
                 scene: Scene,
                 global_offsets: np.ndarray) -> None:
        self.scene = scene
        self.global_offsets = np.asarray(global_offsets, dtype=np.float64)

    # Get the original coordinates back (padded entries stay zero)
    def Decenter(self) -> np.ndarray:
        restored = self.scene.trajectories + self.global_offsets[:, None, None, :]
        restored[~self.scene.visibility] = 0.0
        return restored
