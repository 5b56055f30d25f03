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
from scipy.linalg import eigvalsh

from social_mae.metrics.metrics_ex import MetricArgumentError
from social_mae.utils.union_find import UnionFind


#
# Classes
#

# Constants for spectral check class
class SpectralCheckConst:
    # Eigenvalues below this (absolute) count as zero
    ZERO_TOL: float = 1e-8


# Spectral and combinatorial component counts of a binary symmetric adjacency
class SpectralCheck:
    # Number of zero eigenvalues of the graph Laplacian
    @staticmethod
    def LaplacianZeroEigs(adjacency: np.ndarray) -> int:
        adjacency = SpectralCheck.__Check(adjacency)
        off_diag = adjacency - np.diag(np.diag(adjacency))
        laplacian = np.diag(off_diag.sum(axis=1)) - off_diag
        return int(np.sum(np.abs(eigvalsh(laplacian)) < SpectralCheckConst.ZERO_TOL))

    # Number of connected components
    @staticmethod
    def ConnectedComponents(adjacency: np.ndarray) -> int:
        adjacency = SpectralCheck.__Check(adjacency)
        union_find = UnionFind(adjacency.shape[0])
        for i, k in zip(*np.nonzero(np.triu(adjacency, k=1))):
            union_find.Union(int(i), int(k))
        return union_find.NumSets()

    # Check input
    @staticmethod
    def __Check(adjacency: np.ndarray) -> np.ndarray:
        adjacency = np.asarray(adjacency, dtype=np.float64)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise MetricArgumentError(f"Adjacency shall be square, got shape {adjacency.shape}")
        if not np.array_equal(adjacency, adjacency.T):
            raise MetricArgumentError("Adjacency shall be symmetric")
        if not np.all((adjacency == 0) | (adjacency == 1)):
            raise MetricArgumentError("Adjacency shall be binary")
        return adjacency
