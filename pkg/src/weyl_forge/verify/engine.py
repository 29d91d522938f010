"""Independent verification of realization certificates.

Only the certificate's own matrices, vectors and polynomials are read; all
spectra and inertias are recomputed here.
"""

import numpy as np
import structlog

from weyl_forge.core.config import DEFAULT_TOLERANCES, ToleranceProfile
from weyl_forge.core.exceptions import DomainError
from weyl_forge.linalg.symmetric import SymMatrix, inertia, spectrum
from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.verify.checks import (
    CheckName,
    CheckResult,
    VerifyReport,
    bound_check,
    decomposition_check,
    exact_block_check,
    interlacing_check,
    spectrum_check,
)

logger = structlog.get_logger()


def _weyl_slack(tol: ToleranceProfile, *matrices: SymMatrix) -> float:
    return tol.spectrum_tol * max(1.0, *(m.fro_norm for m in matrices))


def _log_report(kind: str, report: VerifyReport) -> None:
    if report.passed:
        logger.debug("Verification passed", kind=kind)
    else:
        logger.info("Verification failed", kind=kind, failed=report.failed())


def check_weyl_forward(
    a: SymMatrix, b: SymMatrix, tol: ToleranceProfile = DEFAULT_TOLERANCES
) -> tuple[int, int, VerifyReport]:
    """Forward Weyl: spectrum(A) (p*,q*)-interlaces spectrum(B).

    (p*, q*) is the tolerant inertia of B - A and is returned with the report.
    """
    if a.order != b.order:
        raise DomainError(
            "Forward Weyl check needs equal orders",
            details={"order_A": a.order, "order_B": b.order},
        )
    signature = inertia(b - a, tol.zero_tol)
    check = interlacing_check(
        CheckName.WEYL_FORWARD.value,
        spectrum(a),
        spectrum(b),
        signature.n_plus,
        signature.n_minus,
        _weyl_slack(tol, a, b),
    )
    if not check.passed:
        logger.warning(
            "Forward Weyl inequality failed numerically",
            p=signature.n_plus,
            q=signature.n_minus,
            residual=check.residual,
        )
    return signature.n_plus, signature.n_minus, VerifyReport.from_checks([check])


def check_realization(
    r: Realization,
    p: int | None = None,
    q: int | None = None,
    tol: ToleranceProfile = DEFAULT_TOLERANCES,
) -> VerifyReport:
    """Spectra, inertia bounds, rank-one decomposition and forward Weyl."""
    p = r.p if p is None else p
    q = r.q if q is None else q
    difference = r.B - r.A
    signature = inertia(difference, tol.zero_tol)

    checks = [
        spectrum_check(CheckName.SPECTRUM_A.value, r.A, r.f, tol.spectrum_tol),
        spectrum_check(CheckName.SPECTRUM_B.value, r.B, r.g, tol.spectrum_tol),
        bound_check(CheckName.INERTIA_PLUS.value, signature.n_plus, p),
        bound_check(CheckName.INERTIA_MINUS.value, signature.n_minus, q),
        decomposition_check(
            difference.entries, r.plus_vectors, r.minus_vectors, tol.decomp_tol
        ),
    ]
    _, _, forward = check_weyl_forward(r.A, r.B, tol)
    checks.extend(forward.checks)

    report = VerifyReport.from_checks(checks)
    _log_report("realization", report)
    return report


def check_bordered(
    r: BorderedRealization, tol: ToleranceProfile = DEFAULT_TOLERANCES
) -> VerifyReport:
    """Leading block against f, whole matrix against g, and Cauchy interlacing."""
    block = r.leading_block()
    if r.f.degree:
        leading = spectrum_check(
            CheckName.LEADING_BLOCK_SPECTRUM.value,
            SymMatrix(block),
            r.f,
            tol.spectrum_tol,
        )
    else:
        leading = CheckResult(
            CheckName.LEADING_BLOCK_SPECTRUM.value, True, 0.0, tol.spectrum_tol
        )

    checks = [
        leading,
        spectrum_check(CheckName.SPECTRUM.value, r.M, r.g, tol.spectrum_tol),
        exact_block_check(block, r.f),
        interlacing_check(
            CheckName.INCLUSION_INTERLACING.value,
            r.f,
            spectrum(r.M),
            r.p,
            0,
            _weyl_slack(tol, r.M),
        ),
    ]
    report = VerifyReport.from_checks(checks)
    _log_report("bordered", report)
    return report


def check_weyl_sum(
    a: SymMatrix, h: SymMatrix, tol: ToleranceProfile = DEFAULT_TOLERANCES
) -> VerifyReport:
    """Additive Weyl bounds on the eigenvalues of A + H.

    lambda_{i+j-1}(A+H) <= lambda_i(A) + lambda_j(H) whenever i + j - 1 <= n,
    and lambda_{i+j-n}(A+H) >= lambda_i(A) + lambda_j(H) whenever i + j > n.
    """
    if a.order != h.order:
        raise DomainError(
            "Additive Weyl check needs equal orders",
            details={"order_A": a.order, "order_H": h.order},
        )
    n = a.order
    lam_a = spectrum(a).array
    lam_h = spectrum(h).array
    lam_s = spectrum(SymMatrix(a.entries + h.entries)).array
    pair_sums = lam_a[:, None] + lam_h[None, :]
    i, j = np.indices((n, n))

    upper_mask = i + j <= n - 1
    lower_mask = i + j >= n - 1
    upper = np.max(lam_s[(i + j)[upper_mask]] - pair_sums[upper_mask])
    lower = np.max(pair_sums[lower_mask] - lam_s[(i + j - n + 1)[lower_mask]])

    slack = _weyl_slack(tol, a, h)
    report = VerifyReport.from_checks(
        [
            CheckResult(
                CheckName.WEYL_SUM_UPPER.value,
                bool(upper <= slack),
                max(float(upper), 0.0),
                slack,
            ),
            CheckResult(
                CheckName.WEYL_SUM_LOWER.value,
                bool(lower <= slack),
                max(float(lower), 0.0),
                slack,
            ),
        ]
    )
    _log_report("weyl_sum", report)
    return report
