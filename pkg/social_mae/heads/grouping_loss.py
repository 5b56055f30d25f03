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
from typing import List

import torch
from torch.nn import functional as F

from social_mae.heads.eig_loss import EigLoss
from social_mae.heads.group_prediction import GroupPrediction


#
# Classes
#

# Grouping loss class: lambda_bce * pairwise BCE + lambda_eig * spectral loss + lambda_count * (C - C_gt)^2.
# All terms are over real persons; the partition indexes real persons in order.
class GroupingLoss:
    # Compute loss
    @staticmethod
    def Compute(pred: GroupPrediction,
                partition: List[List[int]],
                lambda_bce: float = 1.0,
                lambda_eig: float = 1.0,
                lambda_count: float = 1.0,
                alpha: float = 1.0,
                beta: float = 1.0) -> torch.Tensor:
        adjacency = pred.RealAdjacency()
        n = adjacency.shape[0]

        loss = lambda_bce * GroupingLoss.PairwiseBce(adjacency, partition)
        if lambda_eig != 0.0:
            loss = loss + lambda_eig * EigLoss.Compute(adjacency, partition, alpha, beta)
        count_gt = torch.as_tensor(float(len(partition)), dtype=adjacency.dtype)
        loss = loss + lambda_count * (pred.count - count_gt) ** 2
        return loss if n > 0 else 0.0 * loss

    # Mean binary cross-entropy over off-diagonal pairs against co-membership
    @staticmethod
    def PairwiseBce(adjacency: torch.Tensor,
                    partition: List[List[int]]) -> torch.Tensor:
        n = adjacency.shape[0]
        if n < 2:
            return 0.0 * adjacency.sum()
        target = torch.zeros((n, n), dtype=adjacency.dtype)
        for members in partition:
            idx = torch.as_tensor(members, dtype=torch.long)
            target[idx[:, None], idx[None, :]] = 1.0
        off_diag = ~torch.eye(n, dtype=torch.bool)
        return F.binary_cross_entropy(adjacency[off_diag], target[off_diag])
