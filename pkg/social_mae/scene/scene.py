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

from typing import List, Optional

import numpy as np

from social_mae.scene.scene_ex import SceneArgumentError, SceneValidationError


#
# Types
#
GroupLabelsType = List[List[int]]


#
# Classes
#

# Multi-person motion scene.
# Trajectories are [N, J, T, coord_dim] (meters for 3D, pixels for 2D), visibility is [N, J, T].
# Entries where visibility is false are exactly zero.
class Scene:

    coord_dim: int
    trajectories: np.ndarray
    visibility: np.ndarray
    pelvis_index: int
    person_ids: List[str]
    fps: float
    group_labels: Optional[GroupLabelsType]
    pose_actions: Optional[np.ndarray]
    interaction_actions: Optional[np.ndarray]
    padding: np.ndarray

    # Constructor
    def __init__(self,
                 trajectories: np.ndarray,
                 visibility: np.ndarray,
                 pelvis_index: int = 0,
                 fps: float = 15.0,
                 person_ids: Optional[List[str]] = None,
                 group_labels: Optional[GroupLabelsType] = None,
                 pose_actions: Optional[np.ndarray] = None,
                 interaction_actions: Optional[np.ndarray] = None,
                 padding: Optional[np.ndarray] = None) -> None:
        self.trajectories = np.asarray(trajectories, dtype=np.float64)
        self.visibility = np.asarray(visibility, dtype=bool)
        if self.trajectories.ndim != 4:
            raise SceneArgumentError(f"Trajectories shall be [N, J, T, coord_dim], got shape {self.trajectories.shape}")
        self.coord_dim = self.trajectories.shape[3]
        self.pelvis_index = pelvis_index
        self.fps = fps
        self.person_ids = (list(person_ids) if person_ids is not None
                           else [f"p{i}" for i in range(self.trajectories.shape[0])])
        self.group_labels = [sorted(g) for g in group_labels] if group_labels is not None else None
        self.pose_actions = np.asarray(pose_actions, dtype=np.int64) if pose_actions is not None else None
        self.interaction_actions = (np.asarray(interaction_actions, dtype=bool)
                                    if interaction_actions is not None else None)
        self.padding = (np.asarray(padding, dtype=bool) if padding is not None
                        else np.zeros(self.trajectories.shape[0], dtype=bool))

    # Get number of persons
    def NumPersons(self) -> int:
        return self.trajectories.shape[0]

    # Get number of joints
    def NumJoints(self) -> int:
        return self.trajectories.shape[1]

    # Get number of frames
    def NumFrames(self) -> int:
        return self.trajectories.shape[2]

    # Get indexes of the persons that are not padding
    def RealPersons(self) -> np.ndarray:
        return np.flatnonzero(~self.padding)

    # Get if group labels are present
    def HasGroups(self) -> bool:
        return self.group_labels is not None

    # Get if action labels are present
    def HasActions(self) -> bool:
        return self.pose_actions is not None and self.interaction_actions is not None

    # Get the groups made only of real persons
    def RealGroups(self) -> GroupLabelsType:
        if self.group_labels is None:
            raise SceneArgumentError("Scene has no group labels")
        return [g for g in self.group_labels if not any(self.padding[i] for i in g)]

    # Get binary co-membership matrix over all persons
    def CoMembership(self) -> np.ndarray:
        if self.group_labels is None:
            raise SceneArgumentError("Scene has no group labels")
        n = self.NumPersons()
        membership = np.zeros((n, n), dtype=np.float64)
        for group in self.group_labels:
            idx = np.asarray(group, dtype=np.int64)
            membership[np.ix_(idx, idx)] = 1.0
        return membership

    # Get a window of frames [start, end)
    def Slice(self,
              start: int,
              end: int) -> Scene:
        if not 0 <= start < end <= self.NumFrames():
            raise SceneArgumentError(f"Invalid frame window [{start}, {end}) for {self.NumFrames()} frames")
        return Scene(self.trajectories[:, :, start:end].copy(),
                     self.visibility[:, :, start:end].copy(),
                     pelvis_index=self.pelvis_index,
                     fps=self.fps,
                     person_ids=self.person_ids,
                     group_labels=self.group_labels,
                     pose_actions=self.pose_actions,
                     interaction_actions=self.interaction_actions,
                     padding=self.padding)

    # Get a copy with persons reordered
    def PermutePersons(self,
                       order: List[int]) -> Scene:
        order_arr = np.asarray(order, dtype=np.int64)
        if sorted(order) != list(range(self.NumPersons())):
            raise SceneArgumentError("Person order shall be a permutation")
        inverse = np.argsort(order_arr)
        groups = ([sorted(int(inverse[i]) for i in g) for g in self.group_labels]
                  if self.group_labels is not None else None)
        return Scene(self.trajectories[order_arr],
                     self.visibility[order_arr],
                     pelvis_index=self.pelvis_index,
                     fps=self.fps,
                     person_ids=[self.person_ids[i] for i in order],
                     group_labels=groups,
                     pose_actions=self.pose_actions[order_arr] if self.pose_actions is not None else None,
                     interaction_actions=(self.interaction_actions[order_arr]
                                          if self.interaction_actions is not None else None),
                     padding=self.padding[order_arr])

    # Validate invariants, raise SceneValidationError on the first violation
    def Validate(self) -> None:
        n, j, t, c = self.trajectories.shape
        if n < 1 or j < 1 or t < 1:
            raise SceneValidationError(f"Scene dimensions shall be positive, got N={n}, J={j}, T={t}")
        if c not in (2, 3):
            raise SceneValidationError(f"coord_dim shall be 2 or 3, got {c}")
        if self.visibility.shape != (n, j, t):
            raise SceneValidationError(f"visibility shape {self.visibility.shape} does not match {(n, j, t)}")
        if not 0 <= self.pelvis_index < j:
            raise SceneValidationError(f"pelvis_index {self.pelvis_index} out of range [0, {j})")
        if not self.fps > 0:
            raise SceneValidationError(f"fps shall be positive, got {self.fps}")
        if len(self.person_ids) != n:
            raise SceneValidationError(f"person_ids has {len(self.person_ids)} entries, expected {n}")
        if self.padding.shape != (n,):
            raise SceneValidationError(f"padding shape {self.padding.shape} does not match ({n},)")
        if not np.all(np.isfinite(self.trajectories)):
            raise SceneValidationError("trajectories contain non-finite values")
        if np.any(self.trajectories[~self.visibility] != 0.0):
            raise SceneValidationError("trajectories shall be zero where visibility is false")
        self.__ValidateGroups(n)
        self.__ValidateActions(n)

    # Validate group labels
    def __ValidateGroups(self,
                         n: int) -> None:
        if self.group_labels is None:
            return
        members = [i for g in self.group_labels for i in g]
        if any(len(g) == 0 for g in self.group_labels):
            raise SceneValidationError("group_labels contains an empty group")
        if sorted(members) != list(range(n)):
            raise SceneValidationError(f"group_labels {self.group_labels} is not a partition of 0..{n - 1}")

    # Validate action labels
    def __ValidateActions(self,
                          n: int) -> None:
        if self.pose_actions is not None:
            if self.pose_actions.shape != (n,):
                raise SceneValidationError(f"pose_actions shape {self.pose_actions.shape} does not match ({n},)")
            if np.any(self.pose_actions < 0):
                raise SceneValidationError("pose_actions shall be non-negative")
        if self.interaction_actions is not None:
            if self.interaction_actions.ndim != 2 or self.interaction_actions.shape[0] != n:
                raise SceneValidationError(
                    f"interaction_actions shape {self.interaction_actions.shape} does not match ({n}, I)"
                )
