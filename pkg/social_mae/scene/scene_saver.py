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
from typing import Any, Dict

import numpy as np

from social_mae.scene.scene import Scene


#
# Classes
#

# Scene JSON saver class, inverse of SceneLoader.
# Output is byte-deterministic for a given scene (fixed key order, shortest round-trip float repr).
class SceneSaver:
    # Save to file
    @staticmethod
    def Save(scene: Scene,
             path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fout:
            fout.write(SceneSaver.ToString(scene))

    # Convert to string
    @staticmethod
    def ToString(scene: Scene) -> str:
        return json.dumps(SceneSaver.ToDict(scene), separators=(",", ":"), allow_nan=False) + "\n"

    # Convert to document
    @staticmethod
    def ToDict(scene: Scene) -> Dict[str, Any]:
        persons = []
        for i in range(scene.NumPersons()):
            persons.append({
                "id": scene.person_ids[i],
                "trajectory": np.transpose(scene.trajectories[i], (1, 0, 2)).tolist(),
                "visibility": np.transpose(scene.visibility[i], (1, 0)).astype(int).tolist(),
            })

        doc: Dict[str, Any] = {
            "coord_dim": int(scene.coord_dim),
            "fps": float(scene.fps),
            "pelvis_index": int(scene.pelvis_index),
            "persons": persons,
        }
        if scene.group_labels is not None:
            doc["groups"] = [[int(i) for i in g] for g in scene.group_labels]
        if scene.pose_actions is not None:
            doc["pose_actions"] = scene.pose_actions.astype(int).tolist()
        if scene.interaction_actions is not None:
            doc["interaction_actions"] = scene.interaction_actions.astype(int).tolist()
        if np.any(scene.padding):
            doc["padding"] = scene.padding.astype(int).tolist()
        return doc
