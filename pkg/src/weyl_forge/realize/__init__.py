"""Constructive realizations of interlacing pairs by symmetric matrices."""

from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.realize.chains import (
    realize_bordered,
    realize_p0,
    realize_weyl_converse,
)
from weyl_forge.realize.rank_one import realize_border_step, realize_rank_one

__all__ = [
    "Realization",
    "BorderedRealization",
    "realize_rank_one",
    "realize_border_step",
    "realize_p0",
    "realize_weyl_converse",
    "realize_bordered",
]
