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
from typing import Dict, List


#
# Classes
#

# Disjoint-set forest with path halving and union by size
class UnionFind:

    parent: List[int]
    size: List[int]

    # Constructor
    def __init__(self,
                 num_elems: int) -> None:
        self.parent = list(range(num_elems))
        self.size = [1] * num_elems

    # Find the root of an element
    def Find(self,
             elem: int) -> int:
        while self.parent[elem] != elem:
            self.parent[elem] = self.parent[self.parent[elem]]
            elem = self.parent[elem]
        return elem

    # Merge the sets of two elements
    def Union(self,
              elem_a: int,
              elem_b: int) -> None:
        root_a, root_b = self.Find(elem_a), self.Find(elem_b)
        if root_a == root_b:
            return
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]

    # Get number of disjoint sets
    def NumSets(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.Find(i) == i)

    # Get the sets, members sorted, sets ordered by smallest member
    def Sets(self) -> List[List[int]]:
        sets: Dict[int, List[int]] = {}
        for i in range(len(self.parent)):
            sets.setdefault(self.Find(i), []).append(i)
        return sorted(sets.values(), key=lambda s: s[0])
