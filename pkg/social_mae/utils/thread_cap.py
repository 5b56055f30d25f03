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
import os


#
# Classes
#

# Constants for thread cap class
class ThreadCapConst:
    # Environment variable
    ENV_VAR: str = "SOCIALMAE_THREADS"
    # Default number of worker threads
    DEFAULT: int = 1


# Worker thread cap read from the environment
class ThreadCap:
    # Get the cap
    @staticmethod
    def Get() -> int:
        value = os.environ.get(ThreadCapConst.ENV_VAR, "").strip()
        if value == "":
            return ThreadCapConst.DEFAULT
        try:
            cap = int(value)
        except ValueError as ex:
            raise ValueError(f"{ThreadCapConst.ENV_VAR} shall be a positive integer, got '{value}'") from ex
        if cap < 1:
            raise ValueError(f"{ThreadCapConst.ENV_VAR} shall be a positive integer, got '{value}'")
        return cap
