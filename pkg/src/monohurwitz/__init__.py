"""Exact monotone Hurwitz numbers, their identities, and topological recursion."""
from __future__ import annotations

from .hurwitz import (BudgetError, HurwitzIndex, HurwitzValue, connected_hurwitz,
                      disconnected_hurwitz, oracle_connected, oracle_disconnected)
from .partitions import character, contents, dimension, hook_product, partitions_of

__version__ = "0.1.0"

__all__ = [
    "BudgetError", "HurwitzIndex", "HurwitzValue", "connected_hurwitz", "disconnected_hurwitz",
    "oracle_connected", "oracle_disconnected", "character", "contents", "dimension",
    "hook_product", "partitions_of", "__version__",
]
