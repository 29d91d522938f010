"""Independent verification of certificates and seeded property suites."""

from weyl_forge.verify.checks import CheckName, CheckResult, VerifyReport
from weyl_forge.verify.engine import (
    check_bordered,
    check_realization,
    check_weyl_forward,
    check_weyl_sum,
)
from weyl_forge.verify.properties import (
    PROPERTY_FAMILIES,
    run_family,
    run_property_suite,
)

__all__ = [
    "CheckName",
    "CheckResult",
    "VerifyReport",
    "check_realization",
    "check_weyl_forward",
    "check_bordered",
    "check_weyl_sum",
    "PROPERTY_FAMILIES",
    "run_family",
    "run_property_suite",
]
