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
from typing import List

import torch

from social_mae.heads.heads_ex import HeadArgumentError


#
# Classes
#

# Spectral grouping loss class.
# L = D - A (self-loops removed), e_g = unit indicator of ground-truth group g, E = [e_1 .. e_G]:
#   sum_g e_g^T L^T L e_g + alpha * exp(-beta * tr(Lb^T Lb)),  Lb = L (I - E E^T)
# The second term keeps A away from the trivial L = 0.
class EigLoss:
    # Compute loss
    @staticmethod
    def Compute(adjacency: torch.Tensor,
                partition: List[List[int]],
                alpha: float = 1.0,
                beta: float = 1.0) -> torch.Tensor:
        n = adjacency.shape[0]
        if len(partition) == 0:
            raise HeadArgumentError("Ground-truth partition shall not be empty")
        if sorted(i for g in partition for i in g) != list(range(n)):
            raise HeadArgumentError(f"Ground-truth partition {partition} does not cover {n} persons")

        laplacian = EigLoss.Laplacian(adjacency)
        indicators = EigLoss.Indicators(partition, n, adjacency.dtype)

        projected = laplacian @ indicators
        null_term = (projected ** 2).sum()
        eye = torch.eye(n, dtype=adjacency.dtype)
        laplacian_bar = laplacian @ (eye - indicators @ indicators.T)
        return null_term + alpha * torch.exp(-beta * (laplacian_bar ** 2).sum())

    # Graph Laplacian of a soft adjacency, diagonal entries of A ignored
    @staticmethod
    def Laplacian(adjacency: torch.Tensor) -> torch.Tensor:
        off_diag = adjacency - torch.diag(torch.diagonal(adjacency))
        return torch.diag(off_diag.sum(dim=1)) - off_diag

    # Unit-normalized group indicator columns [N, G]
    @staticmethod
    def Indicators(partition: List[List[int]],
                   n: int,
                   dtype: torch.dtype) -> torch.Tensor:
        indicators = torch.zeros((n, len(partition)), dtype=dtype)
        for g, members in enumerate(partition):
            indicators[members, g] = 1.0 / math.sqrt(len(members))
        return indicators
