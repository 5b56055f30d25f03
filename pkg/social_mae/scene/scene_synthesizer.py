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

import math
from typing import Any, Dict, List, Optional

import numpy as np

from social_mae.config.config_object import ConfigObject
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.scene.scene import Scene
from social_mae.scene.scene_ex import SceneArgumentError


#
# Classes
#

# Constants for scene synthesizer class
class SceneSynthesizerConst:
    # Distance between consecutive group start points (meters)
    GROUP_SPACING: float = 4.0
    # Radius of the circle members of a group stand on (meters)
    MEMBER_RADIUS: float = 0.6
    # Group speed range (m/s)
    MIN_SPEED: float = 0.4
    MAX_SPEED: float = 1.4
    # Gait frequency bands, one per pose action (Hz)
    GAIT_BASE_FREQ: float = 0.5
    GAIT_BAND_WIDTH: float = 0.3
    # Pelvis height for 3D scenes (meters)
    PELVIS_HEIGHT: float = 1.0
    # Two members closer than this on average interact (meters)
    PROXIMITY_RADIUS: float = 1.5


# Scene synthesis parameters
class SceneSynthConfig:

    num_persons: int
    num_joints: int
    num_frames: int
    coord_dim: int
    num_groups: int
    noise: float
    fps: float
    occlusion_prob: float
    pixel_scale: float
    num_pose_actions: int
    num_interactions: int

    # Constructor
    def __init__(self,
                 num_persons: int = 4,
                 num_joints: int = 13,
                 num_frames: int = 30,
                 coord_dim: int = 3,
                 num_groups: int = 2,
                 noise: float = 0.0,
                 fps: float = 15.0,
                 occlusion_prob: float = 0.0,
                 pixel_scale: float = 100.0,
                 num_pose_actions: int = 10,
                 num_interactions: int = 14) -> None:
        self.num_persons = num_persons
        self.num_joints = num_joints
        self.num_frames = num_frames
        self.coord_dim = coord_dim
        self.num_groups = num_groups
        self.noise = noise
        self.fps = fps
        self.occlusion_prob = occlusion_prob
        self.pixel_scale = pixel_scale
        self.num_pose_actions = num_pose_actions
        self.num_interactions = num_interactions

    # Construct from experiment configuration
    @classmethod
    def FromConfig(cls,
                   config: ConfigObject) -> SceneSynthConfig:
        num_frames: Optional[int] = config.GetValue(ExperimentConfigTypes.SYNTH_NUM_FRAMES)
        if num_frames is None:
            num_frames = (config.GetValue(ExperimentConfigTypes.HISTORY_FRAMES) +
                          config.GetValue(ExperimentConfigTypes.FUTURE_FRAMES))
        return cls(num_persons=config.GetValue(ExperimentConfigTypes.SYNTH_NUM_PERSONS),
                   num_joints=config.GetValue(ExperimentConfigTypes.NUM_JOINTS),
                   num_frames=num_frames,
                   coord_dim=config.GetValue(ExperimentConfigTypes.COORD_DIM),
                   num_groups=config.GetValue(ExperimentConfigTypes.SYNTH_NUM_GROUPS),
                   noise=config.GetValue(ExperimentConfigTypes.SYNTH_NOISE),
                   fps=config.GetValue(ExperimentConfigTypes.SYNTH_FPS),
                   occlusion_prob=config.GetValue(ExperimentConfigTypes.SYNTH_OCCLUSION_PROB),
                   pixel_scale=config.GetValue(ExperimentConfigTypes.SYNTH_PIXEL_SCALE),
                   num_pose_actions=config.GetValue(ExperimentConfigTypes.NUM_POSE_ACTIONS),
                   num_interactions=config.GetValue(ExperimentConfigTypes.NUM_INTERACTIONS))

    # Convert to dictionary (manifest)
    def ToDict(self) -> Dict[str, Any]:
        return dict(vars(self))


# Scene synthesizer class.
# Persons of the same group share a base translation velocity, distinct groups have distinct headings,
# limbs oscillate sinusoidally at a per-person gait frequency whose band is the pose action label.
class SceneSynthesizer:
    # Synthesize a labeled scene, pure function of (config, seed)
    @staticmethod
    def Synthesize(config: SceneSynthConfig,
                   seed: int) -> Scene:
        SceneSynthesizer.__CheckConfig(config)

        rng = np.random.default_rng(seed)
        n, j, t = config.num_persons, config.num_joints, config.num_frames

        group_of = SceneSynthesizer.__AssignGroups(rng, n, config.num_groups)
        headings = SceneSynthesizer.__GroupHeadings(rng, config.num_groups)
        speeds = rng.uniform(SceneSynthesizerConst.MIN_SPEED, SceneSynthesizerConst.MAX_SPEED, config.num_groups)
        centers = np.stack([
            np.array([SceneSynthesizerConst.GROUP_SPACING * g, 0.0]) + rng.uniform(-1.0, 1.0, 2)
            for g in range(config.num_groups)
        ])
        bands = rng.integers(0, config.num_pose_actions, n)
        gait_freqs = (SceneSynthesizerConst.GAIT_BASE_FREQ +
                      SceneSynthesizerConst.GAIT_BAND_WIDTH * (bands + rng.uniform(0.0, 1.0, n)))
        phases = rng.uniform(0.0, 2.0 * math.pi, (n, j))

        time_s = np.arange(t, dtype=np.float64) / config.fps
        template = SceneSynthesizer.__SkeletonTemplate(j)
        ground = np.zeros((n, j, t, 2), dtype=np.float64)
        height = np.zeros((n, j, t), dtype=np.float64)

        for g in range(config.num_groups):
            members = np.flatnonzero(group_of == g)
            direction = np.array([math.cos(headings[g]), math.sin(headings[g])])
            velocity = speeds[g] * direction
            for k, p in enumerate(members):
                angle = 2.0 * math.pi * k / len(members)
                start = centers[g] + (SceneSynthesizerConst.MEMBER_RADIUS * np.array([math.cos(angle), math.sin(angle)])
                                      if len(members) > 1 else 0.0)
                pelvis = start[None, :] + time_s[:, None] * velocity[None, :]
                # Limbs swing along the walking direction, the pelvis only translates
                swing = (template["amplitude"][:, None] *
                         np.sin(2.0 * math.pi * gait_freqs[p] * time_s[None, :] + phases[p][:, None]))
                ground[p] = (pelvis[None, :, :] + template["ground"][:, None, :] +
                             swing[:, :, None] * direction[None, None, :])
                height[p] = SceneSynthesizerConst.PELVIS_HEIGHT + template["height"][:, None]

        if config.noise > 0.0:
            ground += config.noise * rng.standard_normal(ground.shape)
            height += config.noise * rng.standard_normal(height.shape)

        if config.coord_dim == 3:
            trajectories = np.concatenate([ground, height[..., None]], axis=3)
        else:
            trajectories = ground * config.pixel_scale

        visibility = SceneSynthesizer.__Visibility(rng, n, j, t, config.occlusion_prob)
        trajectories[~visibility] = 0.0

        groups = [np.flatnonzero(group_of == g).tolist() for g in range(config.num_groups)]
        scale = 1.0 if config.coord_dim == 3 else config.pixel_scale
        interactions = SceneSynthesizer.__Interactions(trajectories, visibility, group_of,
                                                       SceneSynthesizerConst.PROXIMITY_RADIUS * scale,
                                                       config.num_interactions)

        return Scene(trajectories,
                     visibility,
                     pelvis_index=0,
                     fps=config.fps,
                     person_ids=[f"p{i}" for i in range(n)],
                     group_labels=groups,
                     pose_actions=bands,
                     interaction_actions=interactions)

    # Check configuration
    @staticmethod
    def __CheckConfig(config: SceneSynthConfig) -> None:
        if config.num_groups < 1 or config.num_groups > config.num_persons:
            raise SceneArgumentError(
                f"Number of groups ({config.num_groups}) shall be in [1, {config.num_persons}]"
            )
        if config.coord_dim not in (2, 3):
            raise SceneArgumentError(f"coord_dim shall be 2 or 3, got {config.coord_dim}")
        if config.num_joints < 1 or config.num_frames < 1:
            raise SceneArgumentError("Number of joints and frames shall be positive")

    # Assign every person to a group, every group gets at least one person
    @staticmethod
    def __AssignGroups(rng: np.random.Generator,
                       n: int,
                       num_groups: int) -> np.ndarray:
        labels = np.concatenate([np.arange(num_groups), rng.integers(0, num_groups, n - num_groups)])
        return np.sort(labels)

    # Distinct group headings: evenly spaced, jittered by less than half the spacing
    @staticmethod
    def __GroupHeadings(rng: np.random.Generator,
                        num_groups: int) -> np.ndarray:
        spacing = 2.0 * math.pi / num_groups
        return np.arange(num_groups) * spacing + rng.uniform(-0.25, 0.25, num_groups) * spacing

    # Skeleton template relative to the pelvis (joint 0)
    @staticmethod
    def __SkeletonTemplate(num_joints: int) -> Dict[str, np.ndarray]:
        ground = np.zeros((num_joints, 2), dtype=np.float64)
        height = np.zeros(num_joints, dtype=np.float64)
        amplitude = np.zeros(num_joints, dtype=np.float64)
        for jj in range(1, num_joints):
            angle = 2.0 * math.pi * jj / num_joints
            radius = 0.15 + 0.05 * (jj % 3)
            ground[jj] = radius * np.array([math.cos(angle), math.sin(angle)])
            height[jj] = 0.8 * (jj / max(num_joints - 1, 1)) - 0.4
            amplitude[jj] = 0.05 + 0.02 * (jj % 4)
        return {"ground": ground, "height": height, "amplitude": amplitude}

    # Visibility: with the given probability a person leaves the scene before the last frame
    @staticmethod
    def __Visibility(rng: np.random.Generator,
                     n: int,
                     j: int,
                     t: int,
                     occlusion_prob: float) -> np.ndarray:
        visibility = np.ones((n, j, t), dtype=bool)
        occluded = rng.uniform(0.0, 1.0, n) < occlusion_prob
        last_frames = rng.integers((t + 1) // 2, t + 1, n)
        for p in np.flatnonzero(occluded):
            visibility[p, :, last_frames[p]:] = False
        return visibility

    # Interaction labels from within-group proximity.
    # Label 0: at least one close group partner; label k >= 1: exactly k close partners (saturating).
    @staticmethod
    def __Interactions(trajectories: np.ndarray,
                       visibility: np.ndarray,
                       group_of: np.ndarray,
                       radius: float,
                       num_interactions: int) -> np.ndarray:
        n = trajectories.shape[0]
        pelvis = trajectories[:, 0, :, :2]
        pelvis_vis = visibility[:, 0, :]
        interactions = np.zeros((n, num_interactions), dtype=bool)
        for p in range(n):
            close: List[int] = []
            for q in np.flatnonzero(group_of == group_of[p]):
                if q == p:
                    continue
                co_visible = pelvis_vis[p] & pelvis_vis[q]
                if not np.any(co_visible):
                    continue
                dist = np.linalg.norm(pelvis[p, co_visible] - pelvis[q, co_visible], axis=1).mean()
                if dist < radius:
                    close.append(int(q))
            if close:
                interactions[p, 0] = True
                interactions[p, min(len(close), num_interactions - 1)] = True
        return interactions
