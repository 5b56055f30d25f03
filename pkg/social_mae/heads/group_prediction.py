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
from typing import List, Optional

import numpy as np
import torch


#
# Classes
#

# Soft adjacency [N, N] (symmetric, unit diagonal), predicted group count and, once extracted, the partition.
# Padding persons are kept in the tensors and left out of the real-person views.
class GroupPrediction:

    adjacency: torch.Tensor
    count: torch.Tensor
    real_persons: np.ndarray
    partition: Optional[List[List[int]]]

    # Constructor
    def __init__(self,
                 adjacency: torch.Tensor,
                 count: torch.Tensor,
                 real_persons: np.ndarray,
                 partition: Optional[List[List[int]]] = None) -> None:
        self.adjacency = adjacency
        self.count = count
        self.real_persons = real_persons
        self.partition = partition

    # Get the adjacency restricted to real persons
    def RealAdjacency(self) -> torch.Tensor:
        idx = torch.as_tensor(self.real_persons, dtype=torch.long)
        return self.adjacency.index_select(0, idx).index_select(1, idx)
