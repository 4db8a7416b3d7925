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

"""
Coroutine API of `cera`. Every type and blocking operation of
`cera.sync_api` is available here too; Hilbert tables and whole analyses
additionally come as coroutines that run their independent rows on an
executor.
"""

from cera._impl._parallel import (
    hilbert_table_async,
    run_analyze_async,
    sr_hilbert_table_async,
)
from cera.sync_api import *  # noqa: F401,F403
from cera.sync_api import __all__ as _sync_all

__all__ = _sync_all + [
    "hilbert_table_async",
    "run_analyze_async",
    "sr_hilbert_table_async",
]
