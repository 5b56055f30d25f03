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
import hashlib
import json
import os
from typing import Any, Dict

from social_mae.harness.harness_ex import ManifestVerifyError
from social_mae.scene.scene_saver import SceneSaver
from social_mae.scene.scene_synthesizer import SceneSynthConfig, SceneSynthesizer
from social_mae.training.scene_dataset import SceneDataset, SceneDatasetConst
from social_mae.utils.utils import Utils


#
# Classes
#

# Synthetic dataset manifest: generator parameters, seed and SHA-256 digest of every scene file
class DatasetManifest:
    # Synthesize M scenes and write them with their manifest, return the manifest
    @staticmethod
    def Synthesize(dir_name: str,
                   synth_config: SceneSynthConfig,
                   num_scenes: int,
                   seed: int) -> Dict[str, Any]:
        os.makedirs(dir_name, exist_ok=True)
        files: Dict[str, str] = {}
        for i in range(num_scenes):
            text = DatasetManifest.SceneText(synth_config, seed, i)
            file_name = SceneDatasetConst.SCENE_FILE_FORMAT.format(i)
            with open(os.path.join(dir_name, file_name), "w", encoding="utf-8", newline="\n") as fout:
                fout.write(text)
            files[file_name] = DatasetManifest.Digest(text.encode("utf-8"))

        manifest = {
            "generator": synth_config.ToDict(),
            "seed": seed,
            "num_scenes": num_scenes,
            "files": files,
        }
        with open(os.path.join(dir_name, SceneDatasetConst.MANIFEST_FILE_NAME), "w",
                  encoding="utf-8", newline="\n") as fout:
            json.dump(manifest, fout, indent=2, sort_keys=True)
            fout.write("\n")
        return manifest

    # Check files against the manifest and against a re-synthesis from its parameters
    @staticmethod
    def Verify(dir_name: str) -> Dict[str, Any]:
        manifest_path = os.path.join(dir_name, SceneDatasetConst.MANIFEST_FILE_NAME)
        try:
            with open(manifest_path, "r", encoding="utf-8") as fin:
                manifest = json.load(fin)
        except (OSError, json.JSONDecodeError) as ex:
            raise ManifestVerifyError(f"Manifest {manifest_path} cannot be read") from ex

        synth_config = SceneSynthConfig(**manifest["generator"])
        files = manifest["files"]
        if len(files) != manifest["num_scenes"]:
            raise ManifestVerifyError(f"Manifest lists {len(files)} files for {manifest['num_scenes']} scenes")
        on_disk = {os.path.basename(f) for f in SceneDataset.Files(dir_name)}
        if on_disk != set(files):
            raise ManifestVerifyError(f"Scene files in {dir_name} do not match the manifest")

        for i in range(manifest["num_scenes"]):
            file_name = SceneDatasetConst.SCENE_FILE_FORMAT.format(i)
            with open(os.path.join(dir_name, file_name), "rb") as fin:
                digest = DatasetManifest.Digest(fin.read())
            if digest != files.get(file_name):
                raise ManifestVerifyError(f"File {file_name} digest does not match the manifest")
            regenerated = DatasetManifest.SceneText(synth_config, manifest["seed"], i).encode("utf-8")
            if DatasetManifest.Digest(regenerated) != digest:
                raise ManifestVerifyError(f"File {file_name} differs from its re-synthesis")
        return manifest

    # Get the text of the i-th scene
    @staticmethod
    def SceneText(synth_config: SceneSynthConfig,
                  seed: int,
                  scene_idx: int) -> str:
        return SceneSaver.ToString(SceneSynthesizer.Synthesize(synth_config, Utils.DeriveSeed(seed, scene_idx)))

    # Get SHA-256 digest
    @staticmethod
    def Digest(data: bytes) -> str:
        return hashlib.sha256(data).hexdigest()
