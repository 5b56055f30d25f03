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
from social_mae.scene.scene_ex import SceneArgumentError


#
# Classes
#

# Scene padding class
class ScenePadding:
    # Pad persons, joints and frames with invisible zero entries.
    # Padded persons are flagged and form singleton groups.
    @staticmethod
    def Pad(scene: Scene,
            target_n: int,
            target_j: int,
            target_t: int) -> Scene:
        n, j, t = scene.NumPersons(), scene.NumJoints(), scene.NumFrames()
        if target_n < n or target_j < j or target_t < t:
            raise SceneArgumentError(
                f"Padding targets ({target_n}, {target_j}, {target_t}) smaller than current dims ({n}, {j}, {t})"
            )
        if (target_n, target_j, target_t) == (n, j, t):
            return scene

        trajectories = np.zeros((target_n, target_j, target_t, scene.coord_dim), dtype=np.float64)
        trajectories[:n, :j, :t] = scene.trajectories
        visibility = np.zeros((target_n, target_j, target_t), dtype=bool)
        visibility[:n, :j, :t] = scene.visibility

        extra = target_n - n
        padding = np.concatenate([scene.padding, np.ones(extra, dtype=bool)])
        person_ids = scene.person_ids + [f"__pad{i}" for i in range(extra)]

        group_labels = None
        if scene.group_labels is not None:
            group_labels = scene.group_labels + [[n + i] for i in range(extra)]
        pose_actions = None
        if scene.pose_actions is not None:
            pose_actions = np.concatenate([scene.pose_actions, np.zeros(extra, dtype=np.int64)])
        interaction_actions = None
        if scene.interaction_actions is not None:
            interaction_actions = np.concatenate([
                scene.interaction_actions,
                np.zeros((extra, scene.interaction_actions.shape[1]), dtype=bool)
            ])

        return Scene(trajectories,
                     visibility,
                     pelvis_index=scene.pelvis_index,
                     fps=scene.fps,
                     person_ids=person_ids,
                     group_labels=group_labels,
                     pose_actions=pose_actions,
                     interaction_actions=interaction_actions,
                     padding=padding)
