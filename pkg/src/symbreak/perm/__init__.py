from .group import Permutation, PermGroup, groups_equal_on_vertices
from .search import (
    DEFAULT_BUDGET,
    AutomorphismSearch,
    BudgetExceeded,
    automorphism_group,
    default_budget,
    find_automorphism,
    is_automorphism,
    refine,
)

__all__ = [
    "DEFAULT_BUDGET",
    "AutomorphismSearch",
    "BudgetExceeded",
    "PermGroup",
    "Permutation",
    "automorphism_group",
    "default_budget",
    "find_automorphism",
    "groups_equal_on_vertices",
    "is_automorphism",
    "refine",
]
