"""Chained constructions: sums of rank-one terms and bordered matrices.

Each chain walks f = h_0, h_1, ..., h_p = g with consecutive members
interlacing, realizes one step at a time on a sorted diagonal and carries
the step back onto the running matrix with an orthogonal alignment.
"""

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES, ToleranceProfile
from weyl_forge.core.exceptions import DomainError
from weyl_forge.linalg.alignment import align_orthogonal, align_pair
from weyl_forge.linalg.symmetric import SymMatrix, add_outer
from weyl_forge.polynomials.interlacing import is_pq_interlacing, split
from weyl_forge.polynomials.rooted import RootedPoly, same_roots
from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.realize.rank_one import realize_border_step, realize_rank_one

logger = structlog.get_logger()


def _require_square_pair(f: RootedPoly, g: RootedPoly, p: int, q: int) -> None:
    if f.degree != g.degree or f.degree < 1:
        raise DomainError(
            "Realization needs equal positive degrees",
            details={"deg_f": f.degree, "deg_g": g.degree},
        )
    if p < 0 or q < 0:
        raise DomainError("p and q must be nonnegative", details={"p": p, "q": q})
    if not is_pq_interlacing(f, g, p, q):
        raise DomainError(
            "Realization needs f (p,q)-interlacing g", details={"p": p, "q": q}
        )


def realize_p0(
    f: RootedPoly,
    g: RootedPoly,
    p: int,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> Realization:
    """A in H(f), B in H(g) with B - A a sum of p rank-one terms.

    Step k moves h_{k-1} to h_k = split(h_{k-1}, g, p-k+1, 0, 1, 0, n), so
    h_p = g. The rank-one vector found on diag(h_{k-1}) is rotated by the
    eigenvectors of the running matrix before it is added.
    """
    _require_square_pair(f, g, p, 0)
    n = f.degree

    a = SymMatrix.diagonal(f)
    running = a
    previous = f
    plus: list[np.ndarray] = []
    for k in range(1, p + 1):
        h = split(previous, g, p - k + 1, 0, 1, 0, n)
        _, alpha = realize_rank_one(previous, h, tol.eq_tol, tol.clamp_tol)
        if np.any(alpha):
            v = align_orthogonal(previous, running, tol.match_tol, tol.align_tol)
            beta = v @ alpha
            running = add_outer(running, beta, 1)
        else:
            beta = alpha
        plus.append(beta)
        previous = h
        logger.debug("Chain step", step=k, of=p, norm=float(np.linalg.norm(beta)))

    return Realization(A=a, B=running, f=f, g=g, p=p, q=0, plus_vectors=plus)


def realize_weyl_converse(
    f: RootedPoly,
    g: RootedPoly,
    p: int,
    q: int,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> Realization:
    """A in H(f), B in H(g) with n_+(B - A) <= p and n_-(B - A) <= q.

    With h = split(f, g, p, q, p, 0, n), both f and g (., 0)-interlace h;
    two sum chains end at C, C1 in H(h), and the orthogonal V with
    V C1 V^T = C carries the g-side chain onto the f side.
    """
    _require_square_pair(f, g, p, q)

    if same_roots(f, g, tol.eq_tol):
        a = SymMatrix.diagonal(f)
        return Realization(A=a, B=a, f=f, g=g, p=p, q=q)
    if q == 0:
        return realize_p0(f, g, p, tol)
    if p == 0:
        mirrored = realize_p0(g, f, q, tol)
        return Realization(
            A=mirrored.B,
            B=mirrored.A,
            f=f,
            g=g,
            p=0,
            q=q,
            minus_vectors=mirrored.plus_vectors,
        )

    h = split(f, g, p, q, p, 0, f.degree)
    from_f = realize_p0(f, h, p, tol)
    from_g = realize_p0(g, h, q, tol)
    v = align_pair(h, from_f.B, from_g.B, tol.match_tol, tol.align_tol)

    realization = Realization(
        A=from_f.A,
        B=from_g.A.congruent(v),
        f=f,
        g=g,
        p=p,
        q=q,
        plus_vectors=from_f.plus_vectors,
        minus_vectors=[v @ u for u in from_g.plus_vectors],
    )
    logger.info("Realized certificate", n=f.degree, p=p, q=q)
    return realization


def realize_bordered(
    f: RootedPoly,
    g: RootedPoly,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> BorderedRealization:
    """M in H(g) whose leading deg f principal block is diag(roots of f).

    Needs p = deg g - deg f >= 1 and f (p,0)-interlacing g. Every step
    appends one row and column, so earlier blocks are never rewritten.
    """
    p = g.degree - f.degree
    if p < 1:
        raise DomainError(
            "Bordered realization needs deg g > deg f",
            details={"deg_f": f.degree, "deg_g": g.degree},
        )
    if not is_pq_interlacing(f, g, p, 0):
        raise DomainError("Bordered realization needs f (p,0)-interlacing g")

    m = np.diag(f.array)
    previous = f
    for k in range(1, p + 1):
        size = f.degree + k - 1
        h = split(previous, g, p - k + 1, 0, 1, 0, size + 1)
        alpha, corner = realize_border_step(previous, h, tol.eq_tol, tol.clamp_tol)
        if size and np.any(alpha):
            v = align_orthogonal(
                previous, SymMatrix(m), tol.match_tol, tol.align_tol
            )
            border = v @ alpha
        else:
            border = alpha

        grown = np.zeros((size + 1, size + 1))
        grown[:size, :size] = m
        grown[:size, size] = border
        grown[size, :size] = border
        grown[size, size] = corner
        m = grown
        previous = h
        logger.debug("Border step", step=k, of=p, corner=corner)

    logger.info("Realized bordered matrix", deg_f=f.degree, deg_g=g.degree)
    return BorderedRealization(M=SymMatrix(m), f=f, g=g)
