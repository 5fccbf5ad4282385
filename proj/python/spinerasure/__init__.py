"""Exact and Monte Carlo statistics for spin-reservoir information erasure.

All angular momentum is in quanta of hbar; per-trajectory ledgers use
integer half-quanta so the first-law identity is exact.
"""

from spinerasure._core import *  # noqa: F401,F403

__version__ = "0.1.0"
