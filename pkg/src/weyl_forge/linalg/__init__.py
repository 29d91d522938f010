"""Dense symmetric linear algebra kernel."""

from weyl_forge.linalg.alignment import align_orthogonal, align_pair
from weyl_forge.linalg.symmetric import (
    EigenDecomp,
    Inertia,
    SymMatrix,
    add_outer,
    inertia,
    sigma_decomposition,
    spectrum,
    sym_eigen,
)

__all__ = [
    "SymMatrix",
    "EigenDecomp",
    "Inertia",
    "sym_eigen",
    "spectrum",
    "inertia",
    "add_outer",
    "sigma_decomposition",
    "align_orthogonal",
    "align_pair",
]
