"""Extended Lounesto classification of spinors under generalized duals."""

from ._core import (
    Momentum,
    __version__,
    admissible_duals,
    bilinears,
    classify,
    derive_eta,
    fpk_check,
    gamma,
    gamma5,
    operator_matrix,
    relation_table,
    slash,
    spin_sum,
    table_v,
)

__all__ = [
    "Momentum",
    "__version__",
    "admissible_duals",
    "bilinears",
    "classify",
    "derive_eta",
    "fpk_check",
    "gamma",
    "gamma5",
    "operator_matrix",
    "relation_table",
    "slash",
    "spin_sum",
    "table_v",
]
