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
from scipy.fft import dct, idct

from social_mae.codec.codec_ex import CodecNumericError
from social_mae.codec.coefficient_block import CoefficientBlock
from social_mae.scene.centered_scene import CenteredScene


#
# Classes
#

# Orthonormal DCT-II codec (inverse is DCT-III), applied along the last axis.
# All coefficients are kept, padded zeros take part in the series.
class DctCodec:
    # Forward transform
    @staticmethod
    def Forward(series: np.ndarray) -> np.ndarray:
        series = DctCodec.__CheckFinite(series, "series")
        return dct(series, type=2, norm="ortho", axis=-1)

    # Inverse transform
    @staticmethod
    def Inverse(coeffs: np.ndarray) -> np.ndarray:
        coeffs = DctCodec.__CheckFinite(coeffs, "coefficients")
        return idct(coeffs, type=2, norm="ortho", axis=-1)

    # Encode a centered scene: [N, J, T, C] -> [N, J, C, T]
    @staticmethod
    def EncodeScene(centered: CenteredScene) -> CoefficientBlock:
        series = np.transpose(centered.scene.trajectories, (0, 1, 3, 2))
        return CoefficientBlock(DctCodec.Forward(series))

    # Decode a block back to trajectories: [N, J, C, T] -> [N, J, T, C]
    @staticmethod
    def DecodeBlock(block: CoefficientBlock) -> np.ndarray:
        return np.transpose(DctCodec.Inverse(block.coeffs), (0, 1, 3, 2))

    # Check that all values are finite
    @staticmethod
    def __CheckFinite(values: np.ndarray,
                      name: str) -> np.ndarray:
        values = np.asarray(values, dtype=np.float64)
        if values.ndim == 0 or values.shape[-1] < 1:
            raise CodecNumericError(f"Transform {name} shall have at least one sample, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise CodecNumericError(f"Transform {name} contain non-finite values")
        return values
