"""The (p,q)-interlacing relation between real-rooted polynomials."""

import math
from dataclasses import dataclass, field
from enum import Enum

import structlog

from weyl_forge.core.exceptions import DomainError, NumericalError
from weyl_forge.polynomials.rooted import RootedPoly, root_at, root_count_geq

logger = structlog.get_logger()


class Side(str, Enum):
    """Which half of the interlacing inequality an index violates."""

    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class Violation:
    """One failed inequality: negative slack at index i."""

    i: int
    side: Side
    slack: float


@dataclass
class InterlaceReport:
    """Outcome of checking f against g at a given (p, q)."""

    holds: bool
    minimal_p: int
    minimal_q: int
    violations: list[Violation] = field(default_factory=list)


def _check_indices(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise DomainError("p and q must be nonnegative", details={"p": p, "q": q})


def _index_range(f: RootedPoly, g: RootedPoly, p: int, q: int) -> range:
    # Outside this window every inequality compares a sentinel with itself.
    reach = max(p, q)
    return range(1 - reach, max(f.degree, g.degree) + reach + 1)


def _lower_holds(f: RootedPoly, g: RootedPoly, p: int, i: int, slack: float) -> bool:
    return root_at(g, i + p) <= root_at(f, i) + slack


def _upper_holds(f: RootedPoly, g: RootedPoly, q: int, i: int, slack: float) -> bool:
    return root_at(f, i) <= root_at(g, i - q) + slack


def is_pq_interlacing(
    f: RootedPoly, g: RootedPoly, p: int, q: int, slack: float = 0.0
) -> bool:
    """True iff r_{i+p}(g) <= r_i(f) <= r_{i-q}(g) for every integer i.

    ``slack`` loosens each inequality by a fixed amount; it is zero for
    exact data and positive only when comparing computed spectra.
    """
    _check_indices(p, q)
    return all(
        _lower_holds(f, g, p, i, slack) and _upper_holds(f, g, q, i, slack)
        for i in _index_range(f, g, p, q)
    )


def minimal_pq(f: RootedPoly, g: RootedPoly) -> tuple[int, int]:
    """Componentwise-least (p, q) with f (p,q)-interlacing g.

    p only enters the lower inequalities and q only the upper ones, so the
    two scans are independent. p = deg g and q = deg f always suffice.
    """
    span = range(1, max(f.degree, g.degree) + 1)
    p_min = next(
        p
        for p in range(g.degree + 1)
        if all(_lower_holds(f, g, p, i, 0.0) for i in span)
    )
    q_min = next(
        q
        for q in range(f.degree + 1)
        if all(_upper_holds(f, g, q, i, 0.0) for i in span)
    )
    return p_min, q_min


def interlace_report(f: RootedPoly, g: RootedPoly, p: int, q: int) -> InterlaceReport:
    """Per-index violations of f (p,q)-interlacing g plus the pair's minimal (p, q)."""
    _check_indices(p, q)
    violations: list[Violation] = []
    for i in _index_range(f, g, p, q):
        if not _lower_holds(f, g, p, i, 0.0):
            violations.append(
                Violation(i, Side.LOWER, root_at(f, i) - root_at(g, i + p))
            )
        if not _upper_holds(f, g, q, i, 0.0):
            violations.append(
                Violation(i, Side.UPPER, root_at(g, i - q) - root_at(f, i))
            )
    p_min, q_min = minimal_pq(f, g)
    return InterlaceReport(
        holds=not violations,
        minimal_p=p_min,
        minimal_q=q_min,
        violations=violations,
    )


def root_count_criterion(f: RootedPoly, g: RootedPoly, p: int, q: int) -> bool:
    """-p <= n(f, r) - n(g, r) <= q for every real r.

    The difference is a step function that only moves at roots, and vanishes
    to the right of all of them, so the roots are the only test points.
    """
    _check_indices(p, q)
    for r in set(f.roots) | set(g.roots):
        diff = root_count_geq(f, r) - root_count_geq(g, r)
        if diff < -p or diff > q:
            return False
    return True


def split_degree_window(
    f: RootedPoly, g: RootedPoly, p: int, q: int, s: int, t: int
) -> tuple[int, int]:
    """Admissible degrees [k, m] for an intermediate polynomial.

    k is floored at 0; loose (p, q) can push the index bound negative.
    """
    k = max(f.degree - t, g.degree - p + s, 0)
    m = min(f.degree + s, g.degree + q - t)
    return k, m


def split(
    f: RootedPoly, g: RootedPoly, p: int, q: int, s: int, t: int, d: int
) -> RootedPoly:
    """Intermediate h of degree d with f (s,t)-interlacing h and h (p-s,q-t) g.

    The i-th root of h is picked from [a_i, b_i] where
    a_i = max(r_{i+t}(f), r_{i+p-s}(g)) and b_i = min(r_{i-s}(f), r_{i-q+t}(g)),
    as r_i = min(b_i, r_{i-1}) with r_0 one above the largest finite root.
    """
    if not is_pq_interlacing(f, g, p, q):
        raise DomainError(
            "split needs f (p,q)-interlacing g", details={"bound": "interlacing"}
        )
    if not 0 <= s <= p:
        raise DomainError("split needs 0 <= s <= p", details={"bound": "s", "s": s})
    if not 0 <= t <= q:
        raise DomainError("split needs 0 <= t <= q", details={"bound": "t", "t": t})
    if d < 0:
        raise DomainError("split needs d >= 0", details={"bound": "d", "d": d})
    k, m = split_degree_window(f, g, p, q, s, t)
    if not k <= d <= m:
        raise DomainError(
            "split degree outside the admissible window",
            details={"bound": "d", "d": d, "k": k, "m": m},
        )

    finite = f.roots + g.roots
    previous = (max(finite) if finite else 0.0) + 1.0
    roots: list[float] = []
    for i in range(1, d + 1):
        a = max(root_at(f, i + t), root_at(g, i + p - s))
        b = min(root_at(f, i - s), root_at(g, i - q + t))
        r = max(min(b, previous), a)
        if not math.isfinite(r):
            raise NumericalError(
                "split produced a non-finite root", details={"i": i, "a": a, "b": b}
            )
        roots.append(r)
        previous = r

    logger.debug("Split pair", p=p, q=q, s=s, t=t, d=d)
    return RootedPoly(tuple(roots))


def common_interlacer(f: RootedPoly, g: RootedPoly, d: int | None = None) -> RootedPoly:
    """h with h interlacing both f and g, for a compatible pair f (1,1) g."""
    if not is_pq_interlacing(f, g, 1, 1):
        raise DomainError("common_interlacer needs f (1,1)-interlacing g")
    k, _ = split_degree_window(f, g, 1, 1, 0, 1)
    return split(f, g, 1, 1, 0, 1, k if d is None else d)


def _dominates_with(lower: tuple[float, ...], upper: tuple[float, ...], r: int) -> bool:
    diffs = [u - x for x, u in zip(lower, upper)]
    return all(v >= 0.0 for v in diffs) and sum(1 for v in diffs if v > 0.0) >= r


def is_strict_pq(f: RootedPoly, g: RootedPoly, p: int, q: int) -> bool:
    """The strict relation: the shifted root vectors dominate with enough gaps.

    (r_{q+1}(f), ..., r_n(f)) <=_p (r_1(g), ..., r_{n-q}(g)) and
    (r_{p+1}(g), ..., r_n(g)) <=_q (r_1(f), ..., r_{n-p}(f)), where <=_r means
    componentwise <= with at least r strictly positive differences.
    """
    _check_indices(p, q)
    if f.degree != g.degree:
        raise DomainError(
            "Strict interlacing needs equal degrees",
            details={"deg_f": f.degree, "deg_g": g.degree},
        )
    n = f.degree
    return _dominates_with(
        f.roots[q:], g.roots[: max(n - q, 0)], p
    ) and _dominates_with(g.roots[p:], f.roots[: max(n - p, 0)], q)
