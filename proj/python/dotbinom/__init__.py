"""Dot-binomial coefficients over finite fields of odd characteristic."""

from ._core import (
    DotbinomError,
    bracket,
    dot_binom,
    dot_binom_variant,
    group_order,
    pascal_row,
    poly,
    run_cli,
)

__all__ = [
    "DotbinomError",
    "bracket",
    "dot_binom",
    "dot_binom_variant",
    "group_order",
    "pascal_row",
    "poly",
    "run_cli",
]
