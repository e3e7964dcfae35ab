"""urbasis: unique representation bases of the integers, constructively.

Exact set algebra (r_A(n), sumsets, Sidon checks), finite Sidon set
constructions, two inductive basis constructions with distinct density
targets, and empirical block/growth analysis, all re-verified at runtime.
"""

from urbasis.errors import (
    BuildInfeasible,
    DensityShortfall,
    InputError,
    InvariantViolation,
    UrbasisError,
)
from urbasis.intset import (
    IntSet,
    counting,
    diffset,
    first_sum_collision,
    is_sidon,
    is_unique_basis_prefix,
    max_abs,
    min_unrepresented,
    rep_count,
    rep_exists,
    sumset,
)

__version__ = "0.1.0"

__all__ = [
    "BuildInfeasible",
    "DensityShortfall",
    "InputError",
    "IntSet",
    "InvariantViolation",
    "UrbasisError",
    "__version__",
    "counting",
    "diffset",
    "first_sum_collision",
    "is_sidon",
    "is_unique_basis_prefix",
    "max_abs",
    "min_unrepresented",
    "rep_count",
    "rep_exists",
    "sumset",
]
