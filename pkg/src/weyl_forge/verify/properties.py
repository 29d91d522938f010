"""Seeded property families for the interlacing calculus and the constructions.

Each family draws its own instances from a seeded generator and counts the
instances that break the property. Counts are the full acceptance sizes
scaled by ``scale``; the selftest command runs them at a small scale.
"""

from collections.abc import Callable

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES, ToleranceProfile
from weyl_forge.core.exceptions import WeylForgeError
from weyl_forge.linalg.symmetric import SymMatrix
from weyl_forge.polynomials.generators import (
    gen_bordered_pair,
    gen_pq_pair,
    random_pair,
    random_poly,
)
from weyl_forge.polynomials.interlacing import (
    common_interlacer,
    is_pq_interlacing,
    minimal_pq,
    root_count_criterion,
    split,
    split_degree_window,
)
from weyl_forge.polynomials.rooted import derivative_roots, merge_roots
from weyl_forge.realize.chains import realize_bordered, realize_weyl_converse
from weyl_forge.verify.checks import CheckResult, VerifyReport
from weyl_forge.verify.engine import (
    check_bordered,
    check_realization,
    check_weyl_forward,
    check_weyl_sum,
)

logger = structlog.get_logger()

Property = Callable[[np.random.Generator, ToleranceProfile], bool]

DERIVATIVE_SLACK = 1e-10


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**31 - 1))


def _random_symmetric(rng: np.random.Generator, n: int) -> SymMatrix:
    x = rng.standard_normal((n, n))
    return SymMatrix((x + x.T) / 2.0)


def criterion_equivalence(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g, p, q = random_pair(rng)
    return is_pq_interlacing(f, g, p, q) == root_count_criterion(f, g, p, q)


def reflexivity(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f = random_poly(rng, int(rng.integers(0, 11)))
    return is_pq_interlacing(f, f, 0, 0)


def symmetry(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g, p, q = random_pair(rng)
    return is_pq_interlacing(f, g, p, q) == is_pq_interlacing(g, f, q, p)


def monotonicity(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g, _, _ = random_pair(rng)
    p, q = minimal_pq(f, g)
    s, t = (int(v) for v in rng.integers(0, 3, size=2))
    return is_pq_interlacing(f, g, p + s, q + t)


def transitivity(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, h, _, _ = random_pair(rng)
    g = random_poly(rng, int(rng.integers(0, 11)))
    p, q = minimal_pq(f, h)
    s, t = minimal_pq(h, g)
    return is_pq_interlacing(f, g, p + s, q + t)


def degree_bound(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g, _, _ = random_pair(rng)
    p, q = minimal_pq(f, g)
    return -p <= f.degree - g.degree <= q


def common_factor(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g, p, q = random_pair(rng, max_degree=6)
    h = random_poly(rng, int(rng.integers(0, 5)))
    return is_pq_interlacing(f, g, p, q) == is_pq_interlacing(
        merge_roots(f, h), merge_roots(g, h), p, q
    )


def derivative(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f = random_poly(rng, int(rng.integers(1, 11)))
    g = random_poly(rng, int(rng.integers(1, 11)))
    p, q = minimal_pq(f, g)
    return is_pq_interlacing(
        derivative_roots(f), derivative_roots(g), p, q, slack=DERIVATIVE_SLACK
    )


def split_soundness(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    n = int(rng.integers(1, 9))
    p, q = (int(v) for v in rng.integers(0, 4, size=2))
    f, g = gen_pq_pair(n, p, q, seed=_seed(rng))
    for s in range(p + 1):
        for t in range(q + 1):
            k, m = split_degree_window(f, g, p, q, s, t)
            for d in range(k, m + 1):
                h = split(f, g, p, q, s, t, d)
                if h.degree != d:
                    return False
                if not is_pq_interlacing(f, h, s, t):
                    return False
                if not is_pq_interlacing(h, g, p - s, q - t):
                    return False
    return True


def compatibility_witness(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    f, g = gen_pq_pair(int(rng.integers(1, 9)), 1, 1, seed=_seed(rng))
    h = common_interlacer(f, g)
    return is_pq_interlacing(h, f, 1, 0) and is_pq_interlacing(h, g, 1, 0)


def main_realization(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    n = int(rng.integers(2, 11))
    p, q = (int(v) for v in rng.integers(0, 5, size=2))
    f, g = gen_pq_pair(n, p, q, min_gap=0.05, seed=_seed(rng))
    return check_realization(realize_weyl_converse(f, g, p, q, tol), tol=tol).passed


def bordered_realization(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    p = int(rng.integers(1, 5))
    n = int(rng.integers(0, 8 - p + 1))
    f, g = gen_bordered_pair(n, p, seed=_seed(rng))
    return check_bordered(realize_bordered(f, g, tol), tol).passed


def forward_weyl(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    n = int(rng.integers(1, 9))
    p, q = (int(v) for v in rng.integers(0, n + 1, size=2))
    a = _random_symmetric(rng, n)
    h = np.zeros((n, n))
    for vec in rng.standard_normal((p, n)):
        h += np.outer(vec, vec)
    for vec in rng.standard_normal((q, n)):
        h -= np.outer(vec, vec)
    b = SymMatrix(a.entries + h)
    p_star, q_star, report = check_weyl_forward(a, b, tol)
    return report.passed and p_star <= p and q_star <= q


def additive_weyl(rng: np.random.Generator, tol: ToleranceProfile) -> bool:
    n = int(rng.integers(1, 9))
    return check_weyl_sum(
        _random_symmetric(rng, n), _random_symmetric(rng, n), tol
    ).passed


PROPERTY_FAMILIES: dict[str, tuple[Property, int]] = {
    "criterion_equivalence": (criterion_equivalence, 10_000),
    "reflexivity": (reflexivity, 5_000),
    "symmetry": (symmetry, 5_000),
    "monotonicity": (monotonicity, 5_000),
    "transitivity": (transitivity, 5_000),
    "degree_bound": (degree_bound, 5_000),
    "common_factor": (common_factor, 5_000),
    "derivative": (derivative, 5_000),
    "split_soundness": (split_soundness, 1_000),
    "compatibility_witness": (compatibility_witness, 1_000),
    "main_realization": (main_realization, 500),
    "bordered_realization": (bordered_realization, 200),
    "forward_weyl": (forward_weyl, 1_000),
    "additive_weyl": (additive_weyl, 1_000),
}


def run_family(
    name: str,
    count: int,
    seed: int = 0,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> CheckResult:
    """Run ``count`` instances of one family; the residual is the failure count."""
    prop, _ = PROPERTY_FAMILIES[name]
    index = list(PROPERTY_FAMILIES).index(name)
    rng = np.random.default_rng([seed, index])
    failures = 0
    for _ in range(count):
        try:
            ok = prop(rng, tol)
        except WeylForgeError as e:
            logger.warning("Property instance raised", family=name, error=e.message)
            ok = False
        failures += not ok
    logger.debug("Property family done", family=name, count=count, failures=failures)
    return CheckResult(
        name=name, passed=failures == 0, residual=float(failures), threshold=0.0
    )


def run_property_suite(
    scale: float = 0.01,
    seed: int = 0,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> VerifyReport:
    """Every property family at ``scale`` times its acceptance count."""
    checks = [
        run_family(name, max(1, round(full * scale)), seed, tol)
        for name, (_, full) in PROPERTY_FAMILIES.items()
    ]
    report = VerifyReport.from_checks(checks)
    logger.info("Property suite finished", scale=scale, seed=seed, passed=report.passed)
    return report
