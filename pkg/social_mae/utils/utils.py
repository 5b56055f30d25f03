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

import numpy as np


#
# Classes
#

# Wrapper for utility functions
class Utils:
    # Convert string to bool
    @staticmethod
    def StrToBool(s: str) -> bool:
        s = s.lower()
        if s in ["true", "on", "yes", "y", "1"]:
            return True
        if s in ["false", "off", "no", "n", "0"]:
            return False
        raise ValueError("Invalid string")

    # Convert string to float
    @staticmethod
    def StrToFloat(s: str) -> float:
        return float(s)

    # Convert string to integer
    @staticmethod
    def StrToInt(s: str) -> int:
        return int(s)

    # Convert comma-separated string to list of integers
    @staticmethod
    def StrToIntList(s: str) -> List[int]:
        return [int(v) for v in s.split(",") if v.strip() != ""]

    # Convert comma-separated string to list of floats
    @staticmethod
    def StrToFloatList(s: str) -> List[float]:
        return [float(v) for v in s.split(",") if v.strip() != ""]

    # Convert list to comma-separated string
    @staticmethod
    def ListToStr(values: List) -> str:
        return ",".join(str(v) for v in values)

    # Round half up (Python's round() rounds half to even)
    @staticmethod
    def RoundHalfUp(x: float) -> int:
        return int(x + 0.5) if x >= 0 else -int(-x + 0.5)

    # Derive a 32-bit seed from a tuple of non-negative integer keys
    @staticmethod
    def DeriveSeed(*keys: int) -> int:
        return int(np.random.SeedSequence(list(keys)).generate_state(1)[0])
