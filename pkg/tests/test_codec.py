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
import math
from typing import Any

import numpy as np
import pytest
import torch

from social_mae.codec.codec_ex import CodecNumericError
from social_mae.codec.dct_codec import DctCodec
from social_mae.codec.dct_matrix import DctMatrix
from social_mae.scene.scene_centering import SceneCentering


#
# Functions
#

# Orthonormal DCT-II by direct summation
def brute_force_dct(series: np.ndarray) -> np.ndarray:
    t = len(series)
    coeffs = np.zeros(t)
    for k in range(t):
        scale = math.sqrt(1.0 / t) if k == 0 else math.sqrt(2.0 / t)
        coeffs[k] = scale * sum(series[n] * math.cos(math.pi * (2 * n + 1) * k / (2 * t)) for n in range(t))
    return coeffs


#
# Tests
#

def test_forward_constant() -> None:
    coeffs = DctCodec.Forward(np.full(16, 2.5))

    assert coeffs[0] == pytest.approx(2.5 * math.sqrt(16), abs=1e-9)
    assert np.all(np.abs(coeffs[1:]) < 1e-9)


def test_forward_single_sample() -> None:
    np.testing.assert_allclose(DctCodec.Forward(np.array([3.25])), [3.25], atol=1e-12)


def test_forward_brute_force() -> None:
    series = np.array([1.0, 0.0, -1.0, 0.0])

    np.testing.assert_allclose(DctCodec.Forward(series), brute_force_dct(series), atol=1e-12)


@pytest.mark.parametrize("length", [1, 2, 15, 16, 30])
def test_inverse_round_trip(length: int,
                            rng: np.random.Generator) -> None:
    series = rng.standard_normal(length)
    coeffs = DctCodec.Forward(series)

    np.testing.assert_allclose(DctCodec.Inverse(coeffs), series, rtol=0.0, atol=1e-9)
    assert np.sum(coeffs ** 2) == pytest.approx(np.sum(series ** 2), rel=1e-9)


def test_inverse_special_values() -> None:
    np.testing.assert_array_equal(DctCodec.Inverse(np.zeros(7)), np.zeros(7))

    dc = np.zeros(9)
    dc[0] = math.sqrt(9)
    np.testing.assert_allclose(DctCodec.Inverse(dc), np.ones(9), atol=1e-9)


def test_linearity_and_inner_product(rng: np.random.Generator) -> None:
    x, y = rng.standard_normal(20), rng.standard_normal(20)
    fx, fy = DctCodec.Forward(x), DctCodec.Forward(y)

    np.testing.assert_allclose(DctCodec.Forward(2.0 * x - 0.5 * y), 2.0 * fx - 0.5 * fy, atol=1e-9)
    assert np.dot(fx, fy) == pytest.approx(np.dot(x, y), rel=1e-8)


def test_non_finite() -> None:
    with pytest.raises(CodecNumericError):
        DctCodec.Forward(np.array([1.0, np.nan, 2.0]))
    with pytest.raises(CodecNumericError):
        DctCodec.Inverse(np.array([np.inf]))


def test_encode_scene(make_scene: Any) -> None:
    centered = SceneCentering.Center(make_scene(1, num_persons=2, num_joints=2, num_groups=1))
    block = DctCodec.EncodeScene(centered)
    traj = centered.scene.trajectories

    assert block.coeffs.shape == (2, 2, 3, 10)
    for n in range(2):
        for j in range(2):
            for c in range(3):
                np.testing.assert_allclose(block.coeffs[n, j, c], brute_force_dct(traj[n, j, :, c]), atol=1e-9)
    np.testing.assert_allclose(DctCodec.DecodeBlock(block), traj, rtol=0.0, atol=1e-8)


def test_encode_zero_scene(make_scene: Any) -> None:
    centered = SceneCentering.Center(make_scene(0))
    centered.scene.trajectories[:] = 0.0

    assert np.all(DctCodec.EncodeScene(centered).coeffs == 0.0)


def test_matrix_matches_codec(rng: np.random.Generator) -> None:
    series = rng.standard_normal((3, 12))
    coeffs = DctMatrix.ForwardTorch(torch.from_numpy(series))

    np.testing.assert_allclose(coeffs.numpy(), DctCodec.Forward(series), atol=1e-10)
    np.testing.assert_allclose(DctMatrix.InverseTorch(coeffs).numpy(), series, atol=1e-10)
