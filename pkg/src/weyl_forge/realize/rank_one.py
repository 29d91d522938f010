"""Single interlacing steps: rank-one updates and one-row borders.

Both steps split off the common roots of the pair first. On the coprime
remainder the new roots are pinned down by the values
c_i = g(r_i) / prod_{j != i} (r_i - r_j) at the old roots r_i, evaluated
as plain products of root differences.
"""

import math

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES
from weyl_forge.core.exceptions import DomainError, NumericalError
from weyl_forge.linalg.symmetric import SymMatrix
from weyl_forge.polynomials.interlacing import is_pq_interlacing
from weyl_forge.polynomials.rooted import RootedPoly, pair_roots

logger = structlog.get_logger()


def _coprime_ratios(
    f: RootedPoly, g: RootedPoly, eq_tol: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Positions of f's unpaired roots, the ratios c_i there, and f1, g1."""
    f_taken, g_taken = pair_roots(f, g, eq_tol)
    free = np.array([i for i, taken in enumerate(f_taken) if not taken], dtype=int)
    f1 = f.array[free]
    g1 = np.array([s for s, taken in zip(g.roots, g_taken) if not taken])

    ratios = np.zeros(free.size)
    for k, r in enumerate(f1):
        others = np.delete(f1, k)
        denominator = float(np.prod(r - others))
        if denominator == 0.0:
            raise NumericalError(
                "Repeated root left after removing common factors",
                details={"i": int(free[k]) + 1, "root": float(r)},
            )
        ratios[k] = float(np.prod(r - g1)) / denominator
    return free, ratios, f1, g1


def _clamp_scale(ratios: np.ndarray, clamp_tol: float) -> float:
    return clamp_tol * max(1.0, float(np.max(np.abs(ratios))) if ratios.size else 1.0)


def realize_rank_one(
    f: RootedPoly,
    g: RootedPoly,
    eq_tol: float = DEFAULT_TOLERANCES.eq_tol,
    clamp_tol: float = DEFAULT_TOLERANCES.clamp_tol,
) -> tuple[SymMatrix, np.ndarray]:
    """A = diag(roots of f) and alpha with A + alpha alpha^T in H(g).

    Requires deg f = deg g and f (1,0)-interlacing g. Entries of alpha at
    common roots are zero; at the others alpha_i = sqrt(-c_i), c_i <= 0.
    """
    if f.degree != g.degree or f.degree < 1:
        raise DomainError(
            "Rank-one realization needs equal positive degrees",
            details={"deg_f": f.degree, "deg_g": g.degree},
        )
    if not is_pq_interlacing(f, g, 1, 0):
        raise DomainError("Rank-one realization needs f (1,0)-interlacing g")

    free, ratios, _, _ = _coprime_ratios(f, g, eq_tol)
    limit = _clamp_scale(ratios, clamp_tol)
    for k, c in enumerate(ratios):
        if c > limit:
            raise NumericalError(
                "Interlacing numerically violated: positive c_i",
                details={"i": int(free[k]) + 1, "c": float(c), "limit": limit},
            )
        if c > 0.0:
            logger.warning("Clamped c_i to zero", i=int(free[k]) + 1, c=float(c))

    alpha = np.zeros(f.degree)
    alpha[free] = [math.sqrt(max(-c, 0.0)) for c in ratios]
    return SymMatrix.diagonal(f), alpha


def realize_border_step(
    f: RootedPoly,
    g: RootedPoly,
    eq_tol: float = DEFAULT_TOLERANCES.eq_tol,
    clamp_tol: float = DEFAULT_TOLERANCES.clamp_tol,
) -> tuple[np.ndarray, float]:
    """Border (alpha, a) with [[diag(f), alpha], [alpha^T, a]] in H(g).

    Requires deg g = deg f + 1 and f (1,0)-interlacing g. On the coprime
    part, det(xI - M) = (x - a) f(x) - sum c_i f_i(x), so a matches the
    traces and alpha_i = sqrt(c_i) with c_i = -g(r_i) / f_i(r_i) >= 0.
    """
    if g.degree != f.degree + 1:
        raise DomainError(
            "Border step needs deg g = deg f + 1",
            details={"deg_f": f.degree, "deg_g": g.degree},
        )
    if not is_pq_interlacing(f, g, 1, 0):
        raise DomainError("Border step needs f (1,0)-interlacing g")

    free, ratios, f1, g1 = _coprime_ratios(f, g, eq_tol)
    weights = -ratios
    limit = _clamp_scale(weights, clamp_tol)
    for k, c in enumerate(weights):
        if c < -limit:
            raise NumericalError(
                "Interlacing numerically violated: negative c_i",
                details={"i": int(free[k]) + 1, "c": float(c), "limit": limit},
            )
        if c < 0.0:
            logger.warning("Clamped c_i to zero", i=int(free[k]) + 1, c=float(c))

    alpha = np.zeros(f.degree)
    alpha[free] = [math.sqrt(max(c, 0.0)) for c in weights]
    corner = float(np.sum(g1) - np.sum(f1))
    return alpha, corner
