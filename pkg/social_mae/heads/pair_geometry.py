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
import torch
from torchvision.ops import generalized_box_iou

from social_mae.scene.scene import Scene


#
# Classes
#

# Constants for pair geometry class
class PairGeometryConst:
    # Pose boxes are inflated by this fraction of their size
    BOX_INFLATION: float = 0.1
    # Minimum box side, keeps single-joint boxes non-degenerate
    MIN_BOX_SIDE: float = 1e-6


# Geometric pair distances computed on raw (not centered) history coordinates
class PairGeometry:
    # Mean frame-wise pelvis distance over co-visible frames, far_distance when a pair has none
    @staticmethod
    def TrajectoryDistance(scene: Scene,
                           far_distance: float) -> np.ndarray:
        n = scene.NumPersons()
        pelvis = scene.trajectories[:, scene.pelvis_index]
        pelvis_vis = scene.visibility[:, scene.pelvis_index]
        dist = np.zeros((n, n), dtype=np.float64)
        for i in range(n):
            for k in range(i + 1, n):
                co_visible = pelvis_vis[i] & pelvis_vis[k]
                if np.any(co_visible):
                    d = np.linalg.norm(pelvis[i, co_visible] - pelvis[k, co_visible], axis=-1).mean()
                else:
                    d = far_distance
                dist[i, k] = dist[k, i] = d
        return dist

    # 1 - GIoU of the inflated 2D pose boxes at the last co-visible frame, far_distance when a pair has none
    @staticmethod
    def GiouDistance(scene: Scene,
                     far_distance: float) -> np.ndarray:
        n = scene.NumPersons()
        any_vis = scene.visibility.any(axis=1)
        dist = np.zeros((n, n), dtype=np.float64)
        for i in range(n):
            for k in range(i + 1, n):
                frames = np.flatnonzero(any_vis[i] & any_vis[k])
                if frames.size == 0:
                    d = far_distance
                else:
                    t = frames[-1]
                    boxes = torch.as_tensor(np.stack([PairGeometry.PoseBox(scene, i, t),
                                                      PairGeometry.PoseBox(scene, k, t)]))
                    d = 1.0 - float(generalized_box_iou(boxes[:1], boxes[1:])[0, 0])
                dist[i, k] = dist[k, i] = d
        return dist

    # Inflated axis-aligned box (x1, y1, x2, y2) of the visible joints of a person at a frame
    @staticmethod
    def PoseBox(scene: Scene,
                person: int,
                frame: int) -> np.ndarray:
        joints = scene.trajectories[person, scene.visibility[person, :, frame], frame, :2]
        low, high = joints.min(axis=0), joints.max(axis=0)
        center = (low + high) / 2.0
        half = np.maximum((high - low) * (1.0 + PairGeometryConst.BOX_INFLATION),
                          PairGeometryConst.MIN_BOX_SIDE) / 2.0
        return np.concatenate([center - half, center + half])
