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


#
# Classes
#

# Frequency coefficients of a whole scene, one length-T vector per (person, joint, axis)
class CoefficientBlock:

    coeffs: np.ndarray

    # Constructor
    def __init__(self,
                 coeffs: np.ndarray) -> None:
        self.coeffs = np.asarray(coeffs, dtype=np.float64)

    # Get number of persons
    def NumPersons(self) -> int:
        return self.coeffs.shape[0]

    # Get number of joints
    def NumJoints(self) -> int:
        return self.coeffs.shape[1]

    # Get coordinate dimension
    def CoordDim(self) -> int:
        return self.coeffs.shape[2]

    # Get series length
    def Length(self) -> int:
        return self.coeffs.shape[3]
