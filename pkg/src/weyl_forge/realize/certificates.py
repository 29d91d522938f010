"""Certificate types emitted by the realization constructions."""

from dataclasses import dataclass, field

import numpy as np

from weyl_forge.core.exceptions import DomainError
from weyl_forge.linalg.symmetric import SymMatrix
from weyl_forge.polynomials.rooted import RootedPoly


@dataclass(frozen=True, eq=False)
class Realization:
    """A in H(f), B in H(g) with B - A = sum(a a^T) - sum(b b^T).

    p and q are the claimed inertia bounds of B - A. Vectors may be zero.
    """

    A: SymMatrix
    B: SymMatrix
    f: RootedPoly
    g: RootedPoly
    p: int
    q: int
    plus_vectors: list[np.ndarray] = field(default_factory=list)
    minus_vectors: list[np.ndarray] = field(default_factory=list)

    def __post_init__(self) -> None:
        n = self.A.order
        if not (self.B.order == n == self.f.degree == self.g.degree):
            raise DomainError(
                "Realization orders and degrees must agree",
                details={
                    "order_A": n,
                    "order_B": self.B.order,
                    "deg_f": self.f.degree,
                    "deg_g": self.g.degree,
                },
            )
        if self.p < 0 or self.q < 0:
            raise DomainError("p and q must be nonnegative")
        for vec in [*self.plus_vectors, *self.minus_vectors]:
            if np.shape(vec) != (n,):
                raise DomainError(
                    "Rank-one vectors must have length n",
                    details={"n": n, "shape": list(np.shape(vec))},
                )

    @property
    def order(self) -> int:
        return self.A.order

    def rank_one_sum(self) -> np.ndarray:
        """sum(a a^T) - sum(b b^T) over the certificate's vectors."""
        total = np.zeros((self.order, self.order))
        for vec in self.plus_vectors:
            total += np.outer(vec, vec)
        for vec in self.minus_vectors:
            total -= np.outer(vec, vec)
        return total


@dataclass(frozen=True, eq=False)
class BorderedRealization:
    """M whose leading deg f block lies in H(f) while M itself lies in H(g)."""

    M: SymMatrix
    f: RootedPoly
    g: RootedPoly

    def __post_init__(self) -> None:
        if self.p < 1:
            raise DomainError(
                "A bordered realization needs deg g - deg f >= 1",
                details={"deg_f": self.f.degree, "deg_g": self.g.degree},
            )
        if self.M.order != self.g.degree:
            raise DomainError(
                "Bordered matrix order must equal deg g",
                details={"order": self.M.order, "deg_g": self.g.degree},
            )

    @property
    def p(self) -> int:
        return self.g.degree - self.f.degree

    def leading_block(self) -> np.ndarray:
        k = self.f.degree
        return self.M.entries[:k, :k]
