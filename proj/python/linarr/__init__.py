"""Crossings and crossing predictors for linear arrangements of trees."""

from ._core import (
    Arrangement,
    EnsembleConfig,
    Tree,
    aldous_broder,
    analyze,
    c_max,
    count_crossings,
    degree_second_moment,
    e0,
    e2,
    e_full,
    p_cross_given_lengths,
    p_table,
    run_ensemble,
    total_length,
    verify_identity,
)

__all__ = [
    "Arrangement",
    "EnsembleConfig",
    "Tree",
    "aldous_broder",
    "analyze",
    "c_max",
    "count_crossings",
    "degree_second_moment",
    "e0",
    "e2",
    "e_full",
    "p_cross_given_lengths",
    "p_table",
    "run_ensemble",
    "total_length",
    "verify_identity",
]
