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
from typing import Optional

from social_mae.codec.dct_codec import DctCodec
from social_mae.scene.centered_scene import CenteredScene
from social_mae.scene.scene import Scene
from social_mae.scene.scene_centering import SceneCentering
from social_mae.scene.scene_padding import ScenePadding
from social_mae.token.token_batch import TokenBatch
from social_mae.token.token_builder import TokenBuilder
from social_mae.token.token_ex import TokenArgumentError


#
# Classes
#

# Scene prepared for the model: padded window, its centered version and the full token batch
class TokenizedScene:

    scene: Scene
    centered: CenteredScene
    tokens: TokenBatch

    # Constructor
    def __init__(self,
                 scene: Scene,
                 centered: CenteredScene,
                 tokens: TokenBatch) -> None:
        self.scene = scene
        self.centered = centered
        self.tokens = tokens


# Scene tokenizer class: pad -> center -> encode -> build tokens
class SceneTokenizer:
    # Tokenize a scene window of at most num_frames frames
    @staticmethod
    def Tokenize(scene: Scene,
                 num_frames: int,
                 num_persons: Optional[int] = None) -> TokenizedScene:
        if scene.NumFrames() > num_frames:
            raise TokenArgumentError(f"Scene has {scene.NumFrames()} frames, the token window is {num_frames}")
        padded = ScenePadding.Pad(scene,
                                  num_persons if num_persons is not None else scene.NumPersons(),
                                  scene.NumJoints(),
                                  num_frames)
        centered = SceneCentering.Center(padded)
        return TokenizedScene(padded, centered, TokenBuilder.Build(centered, DctCodec.EncodeScene(centered)))
