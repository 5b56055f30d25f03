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
import glob
import math
import os
from typing import List

import numpy as np

from social_mae.scene.scene import Scene
from social_mae.scene.scene_loader import SceneLoader
from social_mae.training.training_ex import DatasetNotFoundError


#
# Classes
#

# Constants for scene dataset class
class SceneDatasetConst:
    # Scene file pattern
    SCENE_FILE_PATTERN: str = "scene_*.json"
    # Scene file name format
    SCENE_FILE_FORMAT: str = "scene_{:05d}.json"
    # Manifest file name
    MANIFEST_FILE_NAME: str = "manifest.json"


# Directory of scene files, loaded in file name order
class SceneDataset:
    # Get the sorted scene file paths of a directory
    @staticmethod
    def Files(dir_name: str) -> List[str]:
        if not os.path.isdir(dir_name):
            raise DatasetNotFoundError(f"Dataset directory {dir_name} does not exist")
        return sorted(glob.glob(os.path.join(dir_name, SceneDatasetConst.SCENE_FILE_PATTERN)))

    # Load the first ceil(fraction * M) scenes (at least one)
    @staticmethod
    def Load(dir_name: str,
             fraction: float = 1.0) -> List[Scene]:
        files = SceneDataset.Files(dir_name)
        if len(files) == 0:
            raise DatasetNotFoundError(f"Dataset directory {dir_name} contains no scene file")
        if not 0.0 < fraction <= 1.0:
            raise ValueError(f"Data fraction shall be in (0, 1], got {fraction}")
        count = max(1, math.ceil(round(fraction * len(files), 9)))
        return [SceneLoader.Load(f) for f in files[:count]]

    # Shuffled batches of scene indexes, a pure function of (seed, epoch)
    @staticmethod
    def Batches(num_scenes: int,
                batch_size: int,
                seed: int,
                epoch: int) -> List[List[int]]:
        if batch_size <= 0:
            raise ValueError(f"Batch size shall be positive, got {batch_size}")
        rng = np.random.default_rng(np.random.SeedSequence([seed, epoch]))
        order = rng.permutation(num_scenes).tolist()
        return [order[i:i + batch_size] for i in range(0, num_scenes, batch_size)]
