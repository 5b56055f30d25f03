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
import json
import math
from typing import Any, Dict, List, Optional

import numpy as np

from social_mae.scene.scene import GroupLabelsType, Scene
from social_mae.scene.scene_ex import SceneFormatError


#
# Classes
#

# Scene JSON loader class.
# Document layout: {"coord_dim", "fps", "pelvis_index", "persons": [{"id", "trajectory": TxJxC, "visibility": TxJ}],
# optional "groups", "pose_actions", "interaction_actions", "padding"}.
class SceneLoader:
    # Load from file
    @staticmethod
    def Load(path: str) -> Scene:
        with open(path, "r", encoding="utf-8") as fin:
            try:
                doc = json.load(fin)
            except json.JSONDecodeError as ex:
                raise SceneFormatError(f"File {path} is not a valid JSON document: {ex}") from ex
        return SceneLoader.FromDict(doc)

    # Load from string
    @staticmethod
    def LoadString(text: str) -> Scene:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as ex:
            raise SceneFormatError(f"Not a valid JSON document: {ex}") from ex
        return SceneLoader.FromDict(doc)

    # Build a validated scene from a decoded document
    @staticmethod
    def FromDict(doc: Any) -> Scene:
        if not isinstance(doc, dict):
            raise SceneFormatError("Top-level element shall be an object")

        coord_dim = SceneLoader.__GetInt(doc, "coord_dim")
        pelvis_index = SceneLoader.__GetInt(doc, "pelvis_index")
        fps = SceneLoader.__GetNumber(doc, "fps")
        persons = SceneLoader.__GetField(doc, "persons")
        if not isinstance(persons, list) or len(persons) == 0:
            raise SceneFormatError("Field 'persons' shall be a non-empty list")

        person_ids: List[str] = []
        trajectories: List[np.ndarray] = []
        visibilities: List[np.ndarray] = []
        for i, person in enumerate(persons):
            person_id, traj, vis = SceneLoader.__ParsePerson(person, i, coord_dim)
            person_ids.append(person_id)
            trajectories.append(traj)
            visibilities.append(vis)

        shapes = {t.shape for t in trajectories}
        if len(shapes) != 1:
            raise SceneFormatError(f"Field 'persons[*].trajectory' has inconsistent shapes: {sorted(shapes)}")

        interaction_actions = SceneLoader.__ParseIntArray(doc, "interaction_actions")
        if interaction_actions is not None and not np.all((interaction_actions == 0) | (interaction_actions == 1)):
            raise SceneFormatError("Field 'interaction_actions' shall contain only 0/1")

        scene = Scene(np.stack(trajectories),
                      np.stack(visibilities),
                      pelvis_index=pelvis_index,
                      fps=fps,
                      person_ids=person_ids,
                      group_labels=SceneLoader.__ParseGroups(doc),
                      pose_actions=SceneLoader.__ParseIntArray(doc, "pose_actions"),
                      interaction_actions=interaction_actions,
                      padding=SceneLoader.__ParseIntArray(doc, "padding"))
        scene.Validate()
        return scene

    # Parse a single person
    @staticmethod
    def __ParsePerson(person: Any,
                      idx: int,
                      coord_dim: int) -> tuple:
        if not isinstance(person, dict):
            raise SceneFormatError(f"Field 'persons[{idx}]' shall be an object")
        person_id = SceneLoader.__GetField(person, "id", f"persons[{idx}].")
        if not isinstance(person_id, str):
            raise SceneFormatError(f"Field 'persons[{idx}].id' shall be a string")

        traj = SceneLoader.__ToArray(SceneLoader.__GetField(person, "trajectory", f"persons[{idx}]."),
                                     f"persons[{idx}].trajectory", np.float64)
        vis = SceneLoader.__ToArray(SceneLoader.__GetField(person, "visibility", f"persons[{idx}]."),
                                    f"persons[{idx}].visibility", np.float64)
        if traj.ndim != 3 or traj.shape[2] != coord_dim:
            raise SceneFormatError(f"Field 'persons[{idx}].trajectory' shall be T x J x {coord_dim}, got {traj.shape}")
        if vis.shape != traj.shape[:2]:
            raise SceneFormatError(f"Field 'persons[{idx}].visibility' shall be {traj.shape[:2]}, got {vis.shape}")
        if not np.all(np.isfinite(traj)):
            raise SceneFormatError(f"Field 'persons[{idx}].trajectory' contains non-finite numbers")
        if not np.all((vis == 0) | (vis == 1)):
            raise SceneFormatError(f"Field 'persons[{idx}].visibility' shall contain only 0/1 or booleans")

        # Stored frame-major, kept joint-major in memory
        return person_id, np.transpose(traj, (1, 0, 2)), np.transpose(vis, (1, 0)).astype(bool)

    # Parse groups
    @staticmethod
    def __ParseGroups(doc: Dict[str, Any]) -> Optional[GroupLabelsType]:
        if "groups" not in doc or doc["groups"] is None:
            return None
        groups = doc["groups"]
        if (not isinstance(groups, list) or
                not all(isinstance(g, list) and all(isinstance(i, int) for i in g) for g in groups)):
            raise SceneFormatError("Field 'groups' shall be a list of lists of person indexes")
        return groups

    # Parse an optional integer array
    @staticmethod
    def __ParseIntArray(doc: Dict[str, Any],
                        name: str) -> Optional[np.ndarray]:
        if name not in doc or doc[name] is None:
            return None
        arr = SceneLoader.__ToArray(doc[name], name, np.float64)
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise SceneFormatError(f"Field '{name}' shall contain integers")
        return arr.astype(np.int64)

    # Convert nested list to array
    @staticmethod
    def __ToArray(value: Any,
                  name: str,
                  dtype: type) -> np.ndarray:
        try:
            return np.asarray(value, dtype=dtype)
        except (TypeError, ValueError) as ex:
            raise SceneFormatError(f"Field '{name}' is not a rectangular numeric array") from ex

    # Get field
    @staticmethod
    def __GetField(doc: Dict[str, Any],
                   name: str,
                   prefix: str = "") -> Any:
        if name not in doc:
            raise SceneFormatError(f"Field '{prefix}{name}' is missing")
        return doc[name]

    # Get integer field
    @staticmethod
    def __GetInt(doc: Dict[str, Any],
                 name: str) -> int:
        value = SceneLoader.__GetField(doc, name)
        if isinstance(value, bool) or not isinstance(value, int):
            raise SceneFormatError(f"Field '{name}' shall be an integer")
        return value

    # Get number field
    @staticmethod
    def __GetNumber(doc: Dict[str, Any],
                    name: str) -> float:
        value = SceneLoader.__GetField(doc, name)
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise SceneFormatError(f"Field '{name}' shall be a finite number")
        return float(value)
