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

from social_mae.utils.union_find import UnionFind


#
# Classes
#

# Constants for group extractor class
class GroupExtractorConst:
    # Default edge threshold (edges where A >= threshold)
    THRESHOLD: float = 0.5


# Discrete group extraction from a soft adjacency
class GroupExtractor:
    # Extract the partition as connected components of the thresholded graph.
    # With a predicted count, the threshold is swept to the value whose component count is closest to
    # round(count), ties going to the threshold closest to 0.5.
    @staticmethod
    def Extract(adjacency: np.ndarray,
                count: Optional[float] = None) -> List[List[int]]:
        adjacency = np.asarray(adjacency, dtype=np.float64)
        partition = GroupExtractor.Components(adjacency, GroupExtractorConst.THRESHOLD)
        if count is None or len(partition) == int(round(count)):
            return partition

        target = int(round(count))
        n = adjacency.shape[0]
        off_diag = adjacency[~np.eye(n, dtype=bool)]
        candidates = np.unique(np.concatenate([off_diag, [GroupExtractorConst.THRESHOLD, np.inf]]))

        best = partition
        best_key = (abs(len(partition) - target), 0.0)
        for threshold in candidates:
            components = GroupExtractor.Components(adjacency, threshold)
            key = (abs(len(components) - target), abs(threshold - GroupExtractorConst.THRESHOLD))
            if key < best_key:
                best, best_key = components, key
        return best

    # Connected components of the graph with edges where A >= threshold
    @staticmethod
    def Components(adjacency: np.ndarray,
                   threshold: float) -> List[List[int]]:
        n = adjacency.shape[0]
        union_find = UnionFind(n)
        rows, cols = np.nonzero(np.triu(adjacency >= threshold, k=1))
        for i, k in zip(rows, cols):
            union_find.Union(int(i), int(k))
        return union_find.Sets()

    # Confidence of each group: mean in-group off-diagonal A; for a singleton 1 - mean A to the others
    @staticmethod
    def Confidences(adjacency: np.ndarray,
                    partition: List[List[int]]) -> List[float]:
        adjacency = np.asarray(adjacency, dtype=np.float64)
        n = adjacency.shape[0]
        confidences = []
        for members in partition:
            if len(members) > 1:
                block = adjacency[np.ix_(members, members)]
                confidences.append(float(block[~np.eye(len(members), dtype=bool)].mean()))
            elif n > 1:
                others = [i for i in range(n) if i != members[0]]
                confidences.append(float(1.0 - adjacency[members[0], others].mean()))
            else:
                confidences.append(1.0)
        return confidences
