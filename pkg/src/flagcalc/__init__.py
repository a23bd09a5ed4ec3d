"""Exact Schubert calculus on flag varieties G/P: parabolic factorization,
structure constants, Levi-movability and tensor-cone face data."""

from .cartan import (
    CartanDatum, Coweight, ParabolicSubset, Root, RootSystem, Weight,
    build_root_system, cartan_matrix, pair, parse_group, rho_P,
)
from .errors import BudgetExceeded, FlagcalcError, InvariantViolation, ValidationError
from .weyl import (
    CosetFactorization, WeylElement, bruhat_leq, dual_index, enumerate_min_reps,
    enumerate_weyl_group, factorize, length, min_rep, multiply, parse_word,
)

__version__ = "0.1.0"


def root_system(label: str) -> RootSystem:
    """Shorthand for ``build_root_system(parse_group(label))``."""
    return build_root_system(parse_group(label))


def clear_caches() -> None:
    """Drop every memo table (results never depend on cache state)."""
    from . import cartan, levi, schubert, weyl

    for mod in (cartan, weyl, schubert, levi):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()
