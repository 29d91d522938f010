"""Monic real-rooted polynomials stored as sorted root multisets."""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from weyl_forge.core.config import DEFAULT_TOLERANCES
from weyl_forge.core.exceptions import DomainError, InputValidationError


@dataclass(frozen=True)
class RootedPoly:
    """Monic polynomial prod(x - r) given by its roots in non-increasing order.

    The empty root tuple is the constant polynomial 1. Sentinel roots
    (+inf before the first index, -inf past the last) are never stored;
    they only come out of :func:`root_at`.
    """

    roots: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        for value in self.roots:
            if not math.isfinite(value):
                raise InputValidationError(
                    "Polynomial roots must be finite", details={"root": value}
                )
        for i in range(len(self.roots) - 1):
            if self.roots[i] < self.roots[i + 1]:
                raise InputValidationError(
                    "Roots must be stored in non-increasing order",
                    details={"index": i + 1, "roots": list(self.roots)},
                )

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.roots, dtype=float)

    def __len__(self) -> int:
        return len(self.roots)


def make_poly(values: Iterable[float]) -> RootedPoly:
    """Build a RootedPoly from roots given in any order."""
    collected = [float(v) for v in values]
    bad = [v for v in collected if not math.isfinite(v)]
    if bad:
        raise InputValidationError(
            "Polynomial roots must be finite", details={"non_finite": bad}
        )
    return RootedPoly(tuple(sorted(collected, reverse=True)))


def root_at(f: RootedPoly, i: int) -> float:
    """r_i(f) with the 1-based convention: +inf for i < 1, -inf for i > deg f."""
    if i < 1:
        return math.inf
    if i > f.degree:
        return -math.inf
    return f.roots[i - 1]


def evaluate(f: RootedPoly, x: float) -> float:
    """Value of prod(x - r_i) at a finite point."""
    return float(np.prod(x - f.array)) if f.degree else 1.0


def coefficients(f: RootedPoly) -> tuple[float, ...]:
    """Monic coefficients, highest degree first.

    Entry k is (-1)^k e_k(roots), accumulated one linear factor at a time.
    """
    coeffs = np.zeros(f.degree + 1)
    coeffs[0] = 1.0
    for k, r in enumerate(f.roots):
        coeffs[1 : k + 2] = coeffs[1 : k + 2] - r * coeffs[0 : k + 1]
    return tuple(float(c) for c in coeffs)


def root_count_geq(f: RootedPoly, r: float) -> int:
    """Number of roots in the closed ray [r, +inf)."""
    return sum(1 for value in f.roots if value >= r)


def _distinct_with_multiplicity(f: RootedPoly) -> list[tuple[float, int]]:
    clusters: list[tuple[float, int]] = []
    for value in f.roots:
        if clusters and clusters[-1][0] == value:
            clusters[-1] = (value, clusters[-1][1] + 1)
        else:
            clusters.append((value, 1))
    return clusters


def derivative_roots(
    f: RootedPoly,
    max_iter: int = DEFAULT_TOLERANCES.bisect_max_iter,
    rel_width: float = DEFAULT_TOLERANCES.bisect_rel_width,
) -> RootedPoly:
    """Roots of f'.

    A root of multiplicity m contributes m - 1 copies of itself. Between two
    consecutive distinct roots f' has exactly one simple root; it is found by
    bisection on the sign of f'/f = sum m_j / (x - u_j), which falls
    from +inf to -inf across the gap.
    """
    if f.degree == 0:
        raise DomainError("Derivative roots need a polynomial of degree >= 1")

    clusters = _distinct_with_multiplicity(f)
    values = np.array([u for u, _ in clusters])
    weights = np.array([float(m) for _, m in clusters])

    def log_derivative(x: float) -> float:
        return float(np.sum(weights / (x - values)))

    result: list[float] = []
    for u, m in clusters:
        result.extend([u] * (m - 1))

    for (upper, _), (lower, _) in zip(clusters, clusters[1:]):
        lo, hi = lower, upper
        for _ in range(max_iter):
            if hi - lo <= rel_width * (1.0 + max(abs(lo), abs(hi))):
                break
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if log_derivative(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        result.append(0.5 * (lo + hi))

    return make_poly(result)


def pair_roots(
    f: RootedPoly, g: RootedPoly, eq_tol: float = DEFAULT_TOLERANCES.eq_tol
) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """Mark the roots of f and g taken by the greedy common-root pairing.

    Walks both sorted sequences once; two roots pair when |r - s| <= eq_tol.
    """
    if eq_tol < 0:
        raise DomainError("eq_tol must be nonnegative", details={"eq_tol": eq_tol})

    f_taken = [False] * f.degree
    g_taken = [False] * g.degree
    i = j = 0
    while i < f.degree and j < g.degree:
        r, s = f.roots[i], g.roots[j]
        if abs(r - s) <= eq_tol:
            f_taken[i] = g_taken[j] = True
            i += 1
            j += 1
        elif r > s:
            i += 1
        else:
            j += 1
    return tuple(f_taken), tuple(g_taken)


def common_roots(
    f: RootedPoly, g: RootedPoly, eq_tol: float = DEFAULT_TOLERANCES.eq_tol
) -> tuple[RootedPoly, RootedPoly, RootedPoly]:
    """Split f = d*f1 and g = d*g1 where d collects the paired common roots."""
    f_taken, g_taken = pair_roots(f, g, eq_tol)
    d = RootedPoly(tuple(r for r, t in zip(f.roots, f_taken) if t))
    f1 = RootedPoly(tuple(r for r, t in zip(f.roots, f_taken) if not t))
    g1 = RootedPoly(tuple(s for s, t in zip(g.roots, g_taken) if not t))
    return d, f1, g1


def merge_roots(f: RootedPoly, g: RootedPoly) -> RootedPoly:
    """Roots of the product f*g."""
    return make_poly(f.roots + g.roots)


def same_roots(
    f: RootedPoly, g: RootedPoly, eq_tol: float = DEFAULT_TOLERANCES.eq_tol
) -> bool:
    """True when f and g have the same roots up to eq_tol."""
    if f.degree != g.degree:
        return False
    return all(abs(r - s) <= eq_tol for r, s in zip(f.roots, g.roots))
