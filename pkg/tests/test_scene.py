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
from typing import Any, Dict

import numpy as np
import pytest

from social_mae.scene.scene import Scene
from social_mae.scene.scene_centering import SceneCentering
from social_mae.scene.scene_ex import (
    SceneArgumentError, SceneDegenerateError, SceneFormatError, SceneValidationError
)
from social_mae.scene.scene_loader import SceneLoader
from social_mae.scene.scene_padding import ScenePadding
from social_mae.scene.scene_saver import SceneSaver
from social_mae.scene.scene_synthesizer import SceneSynthConfig, SceneSynthesizer


#
# Functions
#

# Build a small 2D document, N=2, J=3, T=4
def small_document() -> Dict[str, Any]:
    persons = []
    for i in range(2):
        trajectory = [[[float(i + t), float(j)] for j in range(3)] for t in range(4)]
        visibility = [[1, 1, 1] for _ in range(4)]
        persons.append({"id": f"person{i}", "trajectory": trajectory, "visibility": visibility})
    return {"coord_dim": 2, "fps": 15.0, "pelvis_index": 0, "persons": persons, "groups": [[0, 1]]}


# Build a single-person scene from a pelvis trajectory, other joints offset by one
def one_person_scene(pelvis: np.ndarray,
                     visible_frames: int) -> Scene:
    t, c = pelvis.shape
    trajectories = np.zeros((1, 2, t, c))
    trajectories[0, 0] = pelvis
    trajectories[0, 1] = pelvis + 1.0
    visibility = np.zeros((1, 2, t), dtype=bool)
    visibility[0, :, :visible_frames] = True
    trajectories[~visibility] = 0.0
    return Scene(trajectories, visibility)


#
# Tests
#

def test_load_shapes() -> None:
    scene = SceneLoader.FromDict(small_document())

    assert scene.trajectories.shape == (2, 3, 4, 2)
    assert scene.visibility.shape == (2, 3, 4)
    assert scene.coord_dim == 2
    assert scene.person_ids == ["person0", "person1"]
    # Stored frame-major, held joint-major
    assert scene.trajectories[1, 2, 3].tolist() == [4.0, 2.0]


def test_load_overlapping_groups() -> None:
    doc = small_document()
    doc["groups"] = [[0, 1], [1]]

    with pytest.raises(SceneValidationError):
        SceneLoader.FromDict(doc)


def test_load_invisible_nonzero() -> None:
    doc = small_document()
    doc["persons"][0]["visibility"][2][1] = 0

    with pytest.raises(SceneValidationError):
        SceneLoader.FromDict(doc)


def test_load_missing_field() -> None:
    doc = small_document()
    del doc["persons"][1]["visibility"]

    with pytest.raises(SceneFormatError, match=r"persons\[1\]\.visibility"):
        SceneLoader.FromDict(doc)


def test_load_ragged_trajectory() -> None:
    doc = small_document()
    doc["persons"][0]["trajectory"][1].pop()

    with pytest.raises(SceneFormatError, match="trajectory"):
        SceneLoader.FromDict(doc)


def test_load_invalid_json() -> None:
    with pytest.raises(SceneFormatError):
        SceneLoader.LoadString("{\"coord_dim\": 3,")


def test_save_load_round_trip(tmp_path: Any,
                              make_scene: Any) -> None:
    scene = make_scene(3, occlusion_prob=0.5)
    path = str(tmp_path / "scene.json")

    SceneSaver.Save(scene, path)
    loaded = SceneLoader.Load(path)

    np.testing.assert_array_equal(loaded.trajectories, scene.trajectories)
    np.testing.assert_array_equal(loaded.visibility, scene.visibility)
    np.testing.assert_array_equal(loaded.pose_actions, scene.pose_actions)
    np.testing.assert_array_equal(loaded.interaction_actions, scene.interaction_actions)
    assert loaded.group_labels == scene.group_labels
    assert loaded.person_ids == scene.person_ids
    assert loaded.fps == scene.fps
    assert SceneSaver.ToString(loaded) == SceneSaver.ToString(scene)


def test_center_single_person() -> None:
    pelvis = np.array([[0.0, 1.0], [1.0, 2.0], [2.0, 3.0]])
    centered = SceneCentering.Center(one_person_scene(pelvis, 3))

    np.testing.assert_array_equal(centered.global_offsets, [[2.0, 3.0]])
    np.testing.assert_array_equal(centered.scene.trajectories[0, 0], pelvis - [2.0, 3.0])
    np.testing.assert_array_equal(centered.scene.trajectories[0, 0, -1], [0.0, 0.0])


def test_center_already_centered() -> None:
    pelvis = np.array([[1.0, -1.0], [0.5, 0.5], [0.0, 0.0]])
    scene = one_person_scene(pelvis, 3)
    centered = SceneCentering.Center(scene)

    np.testing.assert_array_equal(centered.scene.trajectories, scene.trajectories)
    np.testing.assert_array_equal(centered.global_offsets, np.zeros((1, 2)))


def test_center_partial_visibility() -> None:
    pelvis = np.tile(np.arange(15, dtype=np.float64)[:, None] / 9.0, (1, 3))
    centered = SceneCentering.Center(one_person_scene(pelvis, 10))

    np.testing.assert_allclose(centered.global_offsets, [[1.0, 1.0, 1.0]], atol=1e-12)
    assert np.all(centered.scene.trajectories[0, :, 10:] == 0.0)
    np.testing.assert_array_equal(centered.scene.trajectories[0, 0, 9], [0.0, 0.0, 0.0])


def test_center_round_trip(make_scene: Any) -> None:
    scene = make_scene(5, occlusion_prob=0.7)
    centered = SceneCentering.Center(scene)

    np.testing.assert_allclose(centered.Decenter(), scene.trajectories, rtol=0.0, atol=1e-9)
    for n in range(scene.NumPersons()):
        last = np.flatnonzero(scene.visibility[n, scene.pelvis_index])[-1]
        assert np.all(centered.scene.trajectories[n, scene.pelvis_index, last] == 0.0)


def test_center_no_visible_pelvis() -> None:
    trajectories = np.zeros((1, 2, 3, 3))
    visibility = np.zeros((1, 2, 3), dtype=bool)
    visibility[0, 1] = True
    trajectories[0, 1] = 1.0

    with pytest.raises(SceneDegenerateError):
        SceneCentering.Center(Scene(trajectories, visibility))


def test_pad_persons(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=2, num_groups=1)
    padded = ScenePadding.Pad(scene, 3, scene.NumJoints(), scene.NumFrames())

    assert padded.NumPersons() == 3
    assert not np.any(padded.visibility[2])
    assert np.all(padded.trajectories[2] == 0.0)
    assert padded.padding.tolist() == [False, False, True]
    assert padded.group_labels == [[0, 1], [2]]
    assert padded.RealGroups() == [[0, 1]]
    np.testing.assert_array_equal(padded.trajectories[:2], scene.trajectories)
    padded.Validate()


def test_pad_identity(make_scene: Any) -> None:
    scene = make_scene(0)
    padded = ScenePadding.Pad(scene, scene.NumPersons(), scene.NumJoints(), scene.NumFrames())

    assert SceneSaver.ToString(padded) == SceneSaver.ToString(scene)


def test_pad_frames(make_scene: Any) -> None:
    scene = make_scene(0)
    padded = ScenePadding.Pad(scene, scene.NumPersons(), scene.NumJoints(), 15)

    assert padded.NumFrames() == 15
    assert not np.any(padded.visibility[:, :, 10:])
    assert np.all(padded.visibility[:, :, :10])


def test_pad_shrink(make_scene: Any) -> None:
    scene = make_scene(0)

    with pytest.raises(SceneArgumentError):
        ScenePadding.Pad(scene, scene.NumPersons() - 1, scene.NumJoints(), scene.NumFrames())


def test_slice_and_permute(make_scene: Any) -> None:
    scene = make_scene(2)
    window = scene.Slice(2, 6)
    permuted = scene.PermutePersons([3, 2, 1, 0])

    assert window.NumFrames() == 4
    np.testing.assert_array_equal(window.trajectories, scene.trajectories[:, :, 2:6])
    np.testing.assert_array_equal(permuted.trajectories[0], scene.trajectories[3])
    np.testing.assert_array_equal(permuted.CoMembership(), scene.CoMembership()[::-1, ::-1])
    with pytest.raises(SceneArgumentError):
        scene.Slice(5, 5)


def test_synth_deterministic(toy_synth_config: SceneSynthConfig) -> None:
    first = SceneSynthesizer.Synthesize(toy_synth_config, 7)
    second = SceneSynthesizer.Synthesize(toy_synth_config, 7)
    other = SceneSynthesizer.Synthesize(toy_synth_config, 8)

    assert SceneSaver.ToString(first) == SceneSaver.ToString(second)
    assert SceneSaver.ToString(first) != SceneSaver.ToString(other)


def test_synth_group_velocity() -> None:
    config = SceneSynthConfig(num_persons=4, num_joints=4, num_frames=12, num_groups=2, noise=0.0)
    scene = SceneSynthesizer.Synthesize(config, 3)
    velocity = np.diff(scene.trajectories[:, scene.pelvis_index], axis=1)

    assert len(scene.group_labels) == 2
    for group in scene.group_labels:
        for member in group[1:]:
            np.testing.assert_allclose(velocity[member], velocity[group[0]], atol=1e-12)
    first, second = scene.group_labels[0][0], scene.group_labels[1][0]
    assert not np.allclose(velocity[first], velocity[second])


def test_synth_partition() -> None:
    config = SceneSynthConfig(num_persons=6, num_joints=5, num_frames=8, num_groups=3, num_pose_actions=4)
    scene = SceneSynthesizer.Synthesize(config, 11)

    scene.Validate()
    assert len(scene.group_labels) == 3
    assert sorted(i for g in scene.group_labels for i in g) == list(range(6))
    assert np.all((scene.pose_actions >= 0) & (scene.pose_actions < 4))
    assert scene.interaction_actions.shape == (6, config.num_interactions)


def test_synth_2d_pixels() -> None:
    config = SceneSynthConfig(num_persons=3, num_joints=4, num_frames=8, coord_dim=2, num_groups=1)
    scene = SceneSynthesizer.Synthesize(config, 0)

    scene.Validate()
    assert scene.coord_dim == 2
    # Pixel coordinates are the metric ground plane scaled up
    assert np.abs(scene.trajectories).max() > 10.0


def test_synth_occlusion() -> None:
    config = SceneSynthConfig(num_persons=5, num_joints=3, num_frames=20, num_groups=2, occlusion_prob=1.0)
    scene = SceneSynthesizer.Synthesize(config, 4)

    scene.Validate()
    assert np.all(scene.visibility[:, :, 0])
    assert not np.all(scene.visibility)
    SceneCentering.Center(scene)


def test_synth_too_many_groups() -> None:
    with pytest.raises(SceneArgumentError):
        SceneSynthesizer.Synthesize(SceneSynthConfig(num_persons=2, num_groups=3), 0)
