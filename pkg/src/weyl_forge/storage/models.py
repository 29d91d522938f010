"""Pydantic models for the JSON documents read and written by the toolkit."""

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from weyl_forge.linalg.symmetric import SymMatrix
from weyl_forge.polynomials.interlacing import InterlaceReport
from weyl_forge.polynomials.rooted import RootedPoly, make_poly
from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.verify.checks import VerifyReport

SYMMETRY_TOL = 1e-12


def _finite_or_none(x: float) -> float | None:
    return float(x) if math.isfinite(x) else None


class PolyModel(BaseModel):
    """{"roots": [...]}; any order on input, non-increasing on output."""

    model_config = ConfigDict(extra="forbid")

    roots: list[float]

    @field_validator("roots")
    @classmethod
    def roots_finite(cls, v: list[float]) -> list[float]:
        if not all(math.isfinite(x) for x in v):
            raise ValueError("roots must be finite")
        return v

    @classmethod
    def from_poly(cls, f: RootedPoly) -> "PolyModel":
        return cls(roots=list(f.roots))

    def to_poly(self) -> RootedPoly:
        return make_poly(self.roots)


class MatrixModel(BaseModel):
    """{"n": n, "rows": [[...], ...]} in row-major order."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1)
    rows: list[list[float]]

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixModel":
        if len(self.rows) != self.n or any(len(row) != self.n for row in self.rows):
            raise ValueError(f"rows must form a {self.n}x{self.n} matrix")
        a = np.array(self.rows, dtype=float)
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        scale = max(1.0, float(np.max(np.abs(a))))
        if float(np.max(np.abs(a - a.T))) > SYMMETRY_TOL * scale:
            raise ValueError("matrix must be symmetric")
        return self

    @classmethod
    def from_matrix(cls, m: SymMatrix) -> "MatrixModel":
        return cls(n=m.order, rows=m.entries.tolist())

    def to_matrix(self) -> SymMatrix:
        return SymMatrix(np.array(self.rows, dtype=float))


class PairModel(BaseModel):
    """A generated instance: f (p,q)-interlacing g plus how it was drawn."""

    f: PolyModel
    g: PolyModel
    n: int
    p: int = Field(..., ge=0)
    q: int = Field(..., ge=0)
    seed: int
    min_gap: float


class RealizationModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f: PolyModel
    g: PolyModel
    p: int = Field(..., ge=0)
    q: int = Field(..., ge=0)
    A: MatrixModel
    B: MatrixModel
    plus: list[list[float]] = Field(default_factory=list)
    minus: list[list[float]] = Field(default_factory=list)

    @classmethod
    def from_realization(cls, r: Realization) -> "RealizationModel":
        return cls(
            f=PolyModel.from_poly(r.f),
            g=PolyModel.from_poly(r.g),
            p=r.p,
            q=r.q,
            A=MatrixModel.from_matrix(r.A),
            B=MatrixModel.from_matrix(r.B),
            plus=[np.asarray(v, dtype=float).tolist() for v in r.plus_vectors],
            minus=[np.asarray(v, dtype=float).tolist() for v in r.minus_vectors],
        )

    def to_realization(self) -> Realization:
        return Realization(
            A=self.A.to_matrix(),
            B=self.B.to_matrix(),
            f=self.f.to_poly(),
            g=self.g.to_poly(),
            p=self.p,
            q=self.q,
            plus_vectors=[np.array(v, dtype=float) for v in self.plus],
            minus_vectors=[np.array(v, dtype=float) for v in self.minus],
        )


class BorderedModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f: PolyModel
    g: PolyModel
    M: MatrixModel

    @classmethod
    def from_bordered(cls, r: BorderedRealization) -> "BorderedModel":
        return cls(
            f=PolyModel.from_poly(r.f),
            g=PolyModel.from_poly(r.g),
            M=MatrixModel.from_matrix(r.M),
        )

    def to_bordered(self) -> BorderedRealization:
        return BorderedRealization(
            M=self.M.to_matrix(), f=self.f.to_poly(), g=self.g.to_poly()
        )


class ViolationModel(BaseModel):
    i: int
    side: Literal["lower", "upper"]
    slack: float | None


class InterlaceReportModel(BaseModel):
    holds: bool
    minimal_p: int
    minimal_q: int
    violations: list[ViolationModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: InterlaceReport) -> "InterlaceReportModel":
        return cls(
            holds=report.holds,
            minimal_p=report.minimal_p,
            minimal_q=report.minimal_q,
            violations=[
                ViolationModel(i=v.i, side=v.side.value, slack=_finite_or_none(v.slack))
                for v in report.violations
            ],
        )


class CheckModel(BaseModel):
    name: str
    passed: bool
    residual: float | None
    threshold: float


class VerifyReportModel(BaseModel):
    passed: bool
    checks: list[CheckModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: VerifyReport) -> "VerifyReportModel":
        return cls(
            passed=report.passed,
            checks=[
                CheckModel(
                    name=c.name,
                    passed=c.passed,
                    residual=_finite_or_none(c.residual),
                    threshold=c.threshold,
                )
                for c in report.checks
            ],
        )
