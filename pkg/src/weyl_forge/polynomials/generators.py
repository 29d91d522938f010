"""Seeded instance generators for interlacing pairs."""

import numpy as np

from weyl_forge.core.exceptions import DomainError
from weyl_forge.polynomials.rooted import RootedPoly, make_poly, root_at

ROOT_RANGE = (-5.0, 5.0)
DEFAULT_MIN_GAP = 0.05


def gen_pq_pair(
    n: int, p: int, q: int, min_gap: float = DEFAULT_MIN_GAP, seed: int = 0
) -> tuple[RootedPoly, RootedPoly]:
    """Random degree-n pair (f, g) with f (p,q)-interlacing g.

    g has roots in [-5, 5] separated by at least ``min_gap``; each r_i(f) is
    uniform on [max(r_{i+p}(g), L), min(r_{i-q}(g), U)] and then clipped so
    the sequence stays non-increasing. L and U pad g's extreme roots by one.
    """
    if n < 1:
        raise DomainError("gen_pq_pair needs n >= 1", details={"n": n})
    if p < 0 or q < 0:
        raise DomainError("p and q must be nonnegative", details={"p": p, "q": q})
    if min_gap < 0:
        raise DomainError("min_gap must be nonnegative", details={"min_gap": min_gap})

    low, high = ROOT_RANGE
    free = (high - low) - (n - 1) * min_gap
    if free < 0:
        raise DomainError(
            "min_gap too large for n roots in the sampling range",
            details={"n": n, "min_gap": min_gap},
        )

    rng = np.random.default_rng(seed)
    offsets = np.sort(rng.uniform(0.0, free, size=n))
    g = make_poly(low + offsets + min_gap * np.arange(n))

    floor, ceiling = g.roots[-1] - 1.0, g.roots[0] + 1.0
    previous = np.inf
    f_roots: list[float] = []
    for i in range(1, n + 1):
        lo = max(root_at(g, i + p), floor)
        hi = min(root_at(g, i - q), ceiling)
        value = min(float(rng.uniform(lo, hi)), previous)
        f_roots.append(value)
        previous = value

    return RootedPoly(tuple(f_roots)), g


def random_poly(rng: np.random.Generator, degree: int, grid: int = 4) -> RootedPoly:
    """Roots drawn from the integers in [-grid, grid], so ties are common."""
    return make_poly(float(v) for v in rng.integers(-grid, grid + 1, size=degree))


def random_pair(
    rng: np.random.Generator, max_degree: int = 10, grid: int = 4, max_index: int = 3
) -> tuple[RootedPoly, RootedPoly, int, int]:
    """Unconstrained (f, g, p, q); most draws are not interlacing."""
    f = random_poly(rng, int(rng.integers(0, max_degree + 1)), grid)
    g = random_poly(rng, int(rng.integers(0, max_degree + 1)), grid)
    p, q = (int(v) for v in rng.integers(0, max_index + 1, size=2))
    return f, g, p, q


def gen_bordered_pair(
    n: int, p: int, min_gap: float = DEFAULT_MIN_GAP, seed: int = 0
) -> tuple[RootedPoly, RootedPoly]:
    """Random (f, g) with deg f = n, deg g = n + p and f (p,0)-interlacing g.

    Draws a degree n + p pair with f (p,0)-interlacing g and keeps the n
    largest roots of f.
    """
    if p < 1:
        raise DomainError("gen_bordered_pair needs p >= 1", details={"p": p})
    if n < 0:
        raise DomainError("gen_bordered_pair needs n >= 0", details={"n": n})
    f, g = gen_pq_pair(n + p, p, 0, min_gap, seed)
    return RootedPoly(f.roots[:n]), g
