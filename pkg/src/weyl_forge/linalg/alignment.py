"""Orthogonal alignment of symmetric matrices sharing a spectrum."""

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES
from weyl_forge.core.exceptions import DomainError, NumericalError
from weyl_forge.linalg.symmetric import SymMatrix, sym_eigen
from weyl_forge.polynomials.rooted import RootedPoly

logger = structlog.get_logger()


def align_orthogonal(
    h: RootedPoly,
    c: SymMatrix,
    match_tol: float = DEFAULT_TOLERANCES.match_tol,
    align_tol: float = DEFAULT_TOLERANCES.align_tol,
) -> np.ndarray:
    """Orthogonal V with V diag(roots of h) V^T = C.

    V is the eigenvector matrix of C sorted by non-increasing eigenvalue,
    so column i pairs with r_i(h). Inside a cluster of equal roots any
    orthonormal basis works because the paired diagonal entries agree.
    """
    if h.degree != c.order:
        raise DomainError(
            "Polynomial degree must match the matrix order",
            details={"degree": h.degree, "order": c.order},
        )

    eig = sym_eigen(c)
    target = h.array
    gaps = np.abs(eig.values - target)
    worst = int(np.argmax(gaps))
    scale = max(1.0, float(np.max(np.abs(target))))
    if gaps[worst] > match_tol * scale:
        raise DomainError(
            "Matrix spectrum does not match the polynomial roots",
            details={
                "index": worst + 1,
                "eigenvalue": float(eig.values[worst]),
                "root": float(target[worst]),
                "gap": float(gaps[worst]),
            },
        )

    v = eig.vectors
    residual = float(np.max(np.abs(v @ np.diag(target) @ v.T - c.entries)))
    limit = align_tol * max(1.0, c.max_norm)
    if residual > limit:
        raise NumericalError(
            "Alignment residual above tolerance",
            details={"residual": residual, "limit": limit},
        )
    return v


def align_pair(
    h: RootedPoly,
    c: SymMatrix,
    c1: SymMatrix,
    match_tol: float = DEFAULT_TOLERANCES.match_tol,
    align_tol: float = DEFAULT_TOLERANCES.align_tol,
) -> np.ndarray:
    """Orthogonal V with V C1 V^T = C, for C and C1 both in H(h)."""
    v = align_orthogonal(h, c, match_tol, align_tol) @ align_orthogonal(
        h, c1, match_tol, align_tol
    ).T
    residual = float(np.max(np.abs(v @ c1.entries @ v.T - c.entries)))
    limit = align_tol * max(1.0, c.max_norm)
    if residual > limit:
        raise NumericalError(
            "Pair alignment residual above tolerance",
            details={"residual": residual, "limit": limit},
        )
    logger.debug("Aligned matrices", order=c.order, residual=residual)
    return v
