"""Dense real symmetric matrices: Jacobi eigensolver, inertia, rank-one updates."""

import math
from dataclasses import dataclass

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES
from weyl_forge.core.exceptions import DomainError, InputValidationError, NumericalError
from weyl_forge.polynomials.rooted import RootedPoly

logger = structlog.get_logger()


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense real symmetric matrix of order n >= 1.

    The input is symmetrized as (M + M^T) / 2 on construction, which is
    exactly symmetric in floating point, and stored read-only.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DomainError(
                "A symmetric matrix must be square of order >= 1",
                details={"shape": list(a.shape)},
            )
        if not np.all(np.isfinite(a)):
            raise InputValidationError("Matrix entries must be finite")
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def diagonal(cls, values: RootedPoly | np.ndarray) -> "SymMatrix":
        diag = values.array if isinstance(values, RootedPoly) else values
        return cls(np.diag(np.asarray(diag, dtype=float)))

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    @property
    def fro_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    @property
    def max_norm(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix(self.entries - other.entries)

    def congruent(self, v: np.ndarray) -> "SymMatrix":
        """V M V^T."""
        return SymMatrix(v @ self.entries @ v.T)


@dataclass(frozen=True, eq=False)
class EigenDecomp:
    """values non-increasing; column i of vectors pairs with values[i]."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int
    zero_threshold: float

    @property
    def order(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _negligible(a: np.ndarray, p: int, q: int) -> bool:
    """a[p, q] is below the last bit of both diagonal entries."""
    g = 100.0 * abs(a[p, q])
    app, aqq = abs(a[p, p]), abs(a[q, q])
    return bool(app + g == app and aqq + g == aqq)


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """One Jacobi rotation annihilating a[p, q], applied in place."""
    apq = a[p, q]
    diff = a[q, q] - a[p, p]
    if abs(diff) + 100.0 * abs(apq) == abs(diff):
        t = float(apq / diff)
    else:
        tau = diff / (2.0 * apq)
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.hypot(1.0, t)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def sym_eigen(
    m: SymMatrix,
    tol: float = DEFAULT_TOLERANCES.eigen_tol,
    max_sweeps: int = DEFAULT_TOLERANCES.max_sweeps,
) -> EigenDecomp:
    """Cyclic Jacobi eigendecomposition.

    Sweeps until the off-diagonal Frobenius norm is at most
    tol * max(1, ||M||_F). Each eigenvector column is signed so that its
    largest-magnitude entry is positive.
    """
    a = np.array(m.entries)
    n = m.order
    v = np.eye(n)
    target = tol * max(1.0, m.fro_norm)

    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise NumericalError(
                "Jacobi iteration did not converge",
                details={"residual": off, "target": target, "sweeps": sweeps},
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                if _negligible(a, p, q):
                    a[p, q] = a[q, p] = 0.0
                else:
                    _rotate(a, v, p, q)
        sweeps += 1
        off = _off_norm(a)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    values, v = values[order], v[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(v[:, j])))
        if v[k, j] < 0.0:
            v[:, j] = -v[:, j]

    logger.debug("Jacobi converged", n=n, sweeps=sweeps, residual=off)
    return EigenDecomp(values=values, vectors=v, sweeps=sweeps)


def spectrum(m: SymMatrix, tol: float = DEFAULT_TOLERANCES.eigen_tol) -> RootedPoly:
    """Characteristic polynomial of m, as its root multiset."""
    return RootedPoly(tuple(float(x) for x in sym_eigen(m, tol=tol).values))


def inertia(m: SymMatrix, zero_tol: float = DEFAULT_TOLERANCES.zero_tol) -> Inertia:
    """Sylvester inertia with a zero band of zero_tol * max(1, ||M||_F)."""
    if zero_tol < 0:
        raise DomainError(
            "zero_tol must be nonnegative", details={"zero_tol": zero_tol}
        )
    threshold = zero_tol * max(1.0, m.fro_norm)
    values = sym_eigen(m).values
    n_plus = int(np.sum(values > threshold))
    n_minus = int(np.sum(values < -threshold))
    return Inertia(
        n_plus=n_plus,
        n_minus=n_minus,
        n_zero=m.order - n_plus - n_minus,
        zero_threshold=threshold,
    )


def add_outer(m: SymMatrix, v: np.ndarray, sign: int = 1) -> SymMatrix:
    """M + sign * v v^T."""
    vec = np.asarray(v, dtype=float)
    if vec.shape != (m.order,):
        raise DomainError(
            "Vector length must match the matrix order",
            details={"order": m.order, "shape": list(vec.shape)},
        )
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1", details={"sign": sign})
    return SymMatrix(m.entries + sign * np.outer(vec, vec))


def sigma_decomposition(
    h: SymMatrix, zero_tol: float = DEFAULT_TOLERANCES.zero_tol
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Write H as sum(a a^T) - sum(b b^T) from its spectral decomposition.

    Eigenpairs with |lambda| inside the inertia zero band are dropped, so the
    vector counts equal the tolerant inertia of H.
    """
    threshold = zero_tol * max(1.0, h.fro_norm)
    eig = sym_eigen(h)
    plus = [
        math.sqrt(lam) * eig.vectors[:, i]
        for i, lam in enumerate(eig.values)
        if lam > threshold
    ]
    minus = [
        math.sqrt(-lam) * eig.vectors[:, i]
        for i, lam in enumerate(eig.values)
        if lam < -threshold
    ]
    return plus, minus
