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
import functools

import numpy as np
import torch
from scipy.fft import dct


#
# Classes
#

# Orthonormal DCT-II matrix D (T x T) such that coeffs = D @ series and series = D.T @ coeffs.
# Used where the transform has to stay differentiable inside the model.
class DctMatrix:
    # Get matrix as numpy array
    @staticmethod
    @functools.lru_cache(maxsize=None)
    def Get(length: int) -> np.ndarray:
        matrix = dct(np.eye(length), type=2, norm="ortho", axis=0)
        matrix.setflags(write=False)
        return matrix

    # Get matrix as tensor
    @staticmethod
    def Tensor(length: int,
               dtype: torch.dtype = torch.float32) -> torch.Tensor:
        return torch.from_numpy(np.array(DctMatrix.Get(length))).to(dtype)

    # Inverse transform along the last axis: [..., T] coefficients -> [..., T] series
    @staticmethod
    def InverseTorch(coeffs: torch.Tensor) -> torch.Tensor:
        return coeffs @ DctMatrix.Tensor(coeffs.shape[-1], coeffs.dtype).to(coeffs.device)

    # Forward transform along the last axis: [..., T] series -> [..., T] coefficients
    @staticmethod
    def ForwardTorch(series: torch.Tensor) -> torch.Tensor:
        return series @ DctMatrix.Tensor(series.shape[-1], series.dtype).to(series.device).T
