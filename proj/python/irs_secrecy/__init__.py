# SPDX-License-Identifier: Apache-2.0
"""Link-level simulator for IRS-assisted downlink secrecy with permutation switching."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
