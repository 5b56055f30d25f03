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
from typing import Any, List, Tuple

import numpy as np
import pytest

from social_mae.token.mask_plan import MaskPlan
from social_mae.token.scene_tokenizer import SceneTokenizer
from social_mae.token.token_ex import TokenArgumentError
from social_mae.token.tube_mask_sampler import TubeMaskSampler


#
# Functions
#

# Order-free view of a token batch
def token_multiset(content: np.ndarray,
                   joints: np.ndarray) -> List[Tuple[int, Tuple[float, ...]]]:
    return sorted((int(j), tuple(np.round(row, 12).tolist())) for row, j in zip(content, joints))


#
# Tests
#

def test_build_layout(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=3, num_joints=13)
    tokenized = SceneTokenizer.Tokenize(scene, scene.NumFrames())
    tokens = tokenized.tokens

    assert tokens.NumTokens() == 39
    assert tokens.content.shape == (39, 3 * 10)
    assert tokens.person_index.tolist() == [k // 13 for k in range(39)]
    assert tokens.joint_type_index.tolist() == [k % 13 for k in range(39)]
    assert len({(p, j) for p, j in zip(tokens.person_index, tokens.joint_type_index)}) == 39
    np.testing.assert_array_equal(tokens.global_offset[13], tokenized.centered.global_offsets[1])
    np.testing.assert_array_equal(tokens.global_offset[13:26],
                                  np.repeat(tokenized.centered.global_offsets[1:2], 13, axis=0))


def test_build_person_permutation(make_scene: Any) -> None:
    scene = make_scene(9, num_persons=4)
    original = SceneTokenizer.Tokenize(scene, scene.NumFrames()).tokens
    permuted = SceneTokenizer.Tokenize(scene.PermutePersons([2, 0, 3, 1]), scene.NumFrames()).tokens

    assert (token_multiset(original.content, original.joint_type_index) ==
            token_multiset(permuted.content, permuted.joint_type_index))


def test_tokenize_pads_persons_and_frames(make_scene: Any) -> None:
    scene = make_scene(0)
    tokenized = SceneTokenizer.Tokenize(scene.Slice(0, 6), 8, num_persons=6)

    assert tokenized.tokens.NumTokens() == 6 * 4
    assert tokenized.tokens.num_frames == 8
    assert tokenized.tokens.padding.tolist() == [False] * 16 + [True] * 8
    with pytest.raises(TokenArgumentError):
        SceneTokenizer.Tokenize(scene, 6)


def test_mask_cardinality() -> None:
    plan = TubeMaskSampler.Sample(39, 0.5, 0)

    assert plan.NumMasked() == 20
    assert plan.NumVisible() == 19
    assert TubeMaskSampler.NumMasked(20, 0.55) == 11
    assert TubeMaskSampler.NumMasked(10, 0.25) == 3


def test_mask_deterministic() -> None:
    first = TubeMaskSampler.Sample(39, 0.5, 42)
    second = TubeMaskSampler.Sample(39, 0.5, 42)

    np.testing.assert_array_equal(first.masked, second.masked)


def test_mask_uniform() -> None:
    counts = np.zeros(10)
    draws = 10000
    for seed in range(draws):
        counts[TubeMaskSampler.Sample(10, 0.5, seed).masked] += 1

    assert np.all(np.abs(counts / draws - 0.5) <= 0.02)


def test_mask_partition() -> None:
    for seed in range(50):
        plan = TubeMaskSampler.Sample(17, 0.3, seed)

        assert np.intersect1d(plan.masked, plan.visible).size == 0
        assert sorted(plan.masked.tolist() + plan.visible.tolist()) == list(range(17))
        assert plan.masked.tolist() == sorted(plan.masked.tolist())


@pytest.mark.parametrize("num_tokens,ratio", [(10, 0.0), (10, 1.0), (1, 0.5), (3, 0.1), (3, 0.9)])
def test_mask_infeasible(num_tokens: int,
                         ratio: float) -> None:
    with pytest.raises(TokenArgumentError):
        TubeMaskSampler.Sample(num_tokens, ratio, 0)


def test_apply_mask(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=2)
    tokens = SceneTokenizer.Tokenize(scene, scene.NumFrames()).tokens
    plan = TubeMaskSampler.Sample(8, 0.5, 3)

    visible, masked = TubeMaskSampler.Apply(tokens, plan)

    assert visible.NumTokens() == 4
    assert visible.token_index.tolist() == plan.visible.tolist()
    np.testing.assert_array_equal(visible.content, tokens.content[plan.visible])
    np.testing.assert_array_equal(masked, plan.masked)


def test_apply_empty_plan(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=2)
    tokens = SceneTokenizer.Tokenize(scene, scene.NumFrames()).tokens

    visible, masked = TubeMaskSampler.Apply(tokens, MaskPlan.Empty(8))

    assert visible.NumTokens() == 8
    assert masked.size == 0


def test_apply_visible_excludes_masked_content(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=2)
    tokens = SceneTokenizer.Tokenize(scene, scene.NumFrames()).tokens
    plan = TubeMaskSampler.Sample(8, 0.5, 5)
    tokens.content[plan.masked] = np.nan

    visible, _ = TubeMaskSampler.Apply(tokens, plan)

    assert np.all(np.isfinite(visible.content))


def test_plan_errors(make_scene: Any) -> None:
    scene = make_scene(0, num_persons=2)
    tokens = SceneTokenizer.Tokenize(scene, scene.NumFrames()).tokens

    with pytest.raises(TokenArgumentError):
        MaskPlan.FromMasked(8, [1, 8])
    with pytest.raises(TokenArgumentError):
        MaskPlan.FromMasked(8, [1, 1])
    with pytest.raises(TokenArgumentError):
        TubeMaskSampler.Apply(tokens, TubeMaskSampler.Sample(9, 0.5, 0))
