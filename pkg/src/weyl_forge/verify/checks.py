"""Individual certificate checks and their report types."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from weyl_forge.linalg.symmetric import SymMatrix, sym_eigen
from weyl_forge.polynomials.interlacing import interlace_report
from weyl_forge.polynomials.rooted import RootedPoly


class CheckName(str, Enum):
    """Names of the checks a report can carry."""

    SPECTRUM_A = "spectrum_A"
    SPECTRUM_B = "spectrum_B"
    INERTIA_PLUS = "inertia_plus"
    INERTIA_MINUS = "inertia_minus"
    DECOMPOSITION = "decomposition"
    WEYL_FORWARD = "weyl_forward"
    LEADING_BLOCK_SPECTRUM = "leading_block_spectrum"
    SPECTRUM = "spectrum"
    LEADING_BLOCK_EXACT = "leading_block_exact"
    INCLUSION_INTERLACING = "inclusion_interlacing"
    WEYL_SUM_UPPER = "weyl_sum_upper"
    WEYL_SUM_LOWER = "weyl_sum_lower"


@dataclass
class CheckResult:
    """Outcome of one check: the measured residual against its threshold."""

    name: str
    passed: bool
    residual: float
    threshold: float


@dataclass
class VerifyReport:
    """Aggregate of check results; passes only when every check passes."""

    passed: bool
    checks: list[CheckResult] = field(default_factory=list)

    @classmethod
    def from_checks(cls, checks: list[CheckResult]) -> "VerifyReport":
        return cls(passed=all(c.passed for c in checks), checks=checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _within(name: str, residual: float, threshold: float) -> CheckResult:
    return CheckResult(
        name=name,
        passed=bool(residual <= threshold),
        residual=float(residual),
        threshold=float(threshold),
    )


def root_scale(f: RootedPoly) -> float:
    return max(1.0, float(np.max(np.abs(f.array)))) if f.degree else 1.0


def spectrum_check(
    name: str, m: SymMatrix, f: RootedPoly, spectrum_tol: float
) -> CheckResult:
    """Eigenvalues of m against the roots of f, sorted the same way."""
    threshold = spectrum_tol * root_scale(f)
    if m.order != f.degree:
        return CheckResult(name, False, float("inf"), threshold)
    values = sym_eigen(m).values
    return _within(name, float(np.max(np.abs(values - f.array))), threshold)


def bound_check(name: str, count: int, bound: int) -> CheckResult:
    return _within(name, float(count), float(bound))


def decomposition_check(
    difference: np.ndarray,
    plus: list[np.ndarray],
    minus: list[np.ndarray],
    decomp_tol: float,
) -> CheckResult:
    """B - A against the signed sum of outer products, relative max-norm."""
    total = np.zeros_like(difference)
    for vec in plus:
        total += np.outer(vec, vec)
    for vec in minus:
        total -= np.outer(vec, vec)
    scale = max(1.0, float(np.max(np.abs(difference))) if difference.size else 1.0)
    residual = float(np.max(np.abs(difference - total))) if difference.size else 0.0
    return _within(CheckName.DECOMPOSITION.value, residual / scale, decomp_tol)


def interlacing_check(
    name: str, f: RootedPoly, g: RootedPoly, p: int, q: int, slack: float
) -> CheckResult:
    """Largest violated amount of f (p,q)-interlacing g, against a slack."""
    report = interlace_report(f, g, p, q)
    worst = max((-v.slack for v in report.violations), default=0.0)
    return _within(name, worst, slack)


def exact_block_check(block: np.ndarray, f: RootedPoly) -> CheckResult:
    """Bitwise comparison of a leading block with diag(roots of f)."""
    expected = np.diag(f.array)
    if block.shape != expected.shape:
        name = CheckName.LEADING_BLOCK_EXACT.value
        return CheckResult(name, False, float("inf"), 0.0)
    residual = float(np.max(np.abs(block - expected))) if block.size else 0.0
    return _within(CheckName.LEADING_BLOCK_EXACT.value, residual, 0.0)
