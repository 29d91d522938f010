"""JSON persistence for polynomials, generated pairs and certificates."""

from weyl_forge.storage.models import (
    BorderedModel,
    InterlaceReportModel,
    MatrixModel,
    PairModel,
    PolyModel,
    RealizationModel,
    VerifyReportModel,
)
from weyl_forge.storage.repository import CertificateRepository, dumps

__all__ = [
    "PolyModel",
    "MatrixModel",
    "PairModel",
    "RealizationModel",
    "BorderedModel",
    "InterlaceReportModel",
    "VerifyReportModel",
    "CertificateRepository",
    "dumps",
]
