# Copyright (c) The cera authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# These are the exception types raised through the public API. They are part
# of the stable API.

from typing import Optional


class Error(Exception):
    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class InputError(Error):
    """Malformed input, bad parameters or an out-of-range level index."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        super().__init__(message)
        self.line = line


class StructuralError(InputError):
    def __init__(self, message: str, vertex: int) -> None:
        super().__init__(message)
        self.vertex = vertex


class InvariantViolation(Error):
    """An internal cross-check failed. Always a bug, never recoverable."""


class VertexCollapseWarning(UserWarning):
    pass
