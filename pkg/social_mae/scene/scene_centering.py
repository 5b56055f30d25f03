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

from social_mae.scene.centered_scene import CenteredScene
from social_mae.scene.scene import Scene
from social_mae.scene.scene_ex import SceneDegenerateError


#
# Classes
#

# Scene centering class
class SceneCentering:
    # Subtract, per person, the pelvis coordinate of the last frame where the pelvis is visible.
    # Padding persons get a zero offset.
    @staticmethod
    def Center(scene: Scene) -> CenteredScene:
        offsets = np.zeros((scene.NumPersons(), scene.coord_dim), dtype=np.float64)
        centered = scene.trajectories.copy()

        for n in range(scene.NumPersons()):
            if scene.padding[n]:
                continue
            pelvis_visible = np.flatnonzero(scene.visibility[n, scene.pelvis_index])
            if pelvis_visible.size == 0:
                raise SceneDegenerateError(
                    f"Person {n} ({scene.person_ids[n]}) has no visible pelvis frame, cannot center"
                )
            offsets[n] = scene.trajectories[n, scene.pelvis_index, pelvis_visible[-1]]
            centered[n] -= offsets[n]

        centered[~scene.visibility] = 0.0

        return CenteredScene(Scene(centered,
                                   scene.visibility,
                                   pelvis_index=scene.pelvis_index,
                                   fps=scene.fps,
                                   person_ids=scene.person_ids,
                                   group_labels=scene.group_labels,
                                   pose_actions=scene.pose_actions,
                                   interaction_actions=scene.interaction_actions,
                                   padding=scene.padding),
                             offsets)
