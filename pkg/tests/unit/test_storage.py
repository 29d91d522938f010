"""Unit tests for JSON models and the certificate repository."""

import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from weyl_forge.core.exceptions import InputValidationError
from weyl_forge.polynomials.interlacing import interlace_report
from weyl_forge.polynomials.rooted import RootedPoly, make_poly
from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.realize.chains import realize_bordered, realize_weyl_converse
from weyl_forge.storage.models import (
    InterlaceReportModel,
    MatrixModel,
    PairModel,
    PolyModel,
)
from weyl_forge.storage.repository import CertificateRepository, dumps


class TestModels:
    """Test document validation."""

    def test_poly_normalizes_order(self) -> None:
        """Test roots in any order load sorted non-increasing."""
        assert PolyModel(roots=[0.0, 2.0, 1.0]).to_poly().roots == (2.0, 1.0, 0.0)

    def test_poly_rejects_extra_keys(self) -> None:
        """Test unknown fields are refused."""
        with pytest.raises(ValidationError):
            PolyModel.model_validate({"roots": [1.0], "degree": 1})

    def test_poly_rejects_non_finite(self) -> None:
        """Test inf roots are refused."""
        with pytest.raises(ValidationError):
            PolyModel(roots=[float("inf")])

    def test_matrix_shape(self) -> None:
        """Test rows must match n."""
        with pytest.raises(ValidationError):
            MatrixModel(n=2, rows=[[1.0, 0.0]])

    def test_matrix_symmetry(self) -> None:
        """Test asymmetric entries are refused."""
        with pytest.raises(ValidationError):
            MatrixModel(n=2, rows=[[1.0, 2.0], [3.0, 1.0]])

    def test_report_writes_infinite_slack_as_null(self) -> None:
        """Test violations with an unbounded side serialize to null."""
        report = interlace_report(make_poly([1.0]), make_poly([]), 0, 0)
        model = InterlaceReportModel.from_report(report)
        assert not model.holds
        assert all(v.slack is None for v in model.violations)
        assert "null" in dumps(model)


class TestCertificateRepository:
    """Test file-backed load and save."""

    def test_poly_round_trip(self, repo: CertificateRepository) -> None:
        """Test a polynomial survives save and load."""
        f = make_poly([3.5, -1.25, -1.25])
        repo.save_poly("f.json", f)
        assert repo.load_poly("f.json") == f

    def test_realization_round_trip(
        self,
        repo: CertificateRepository,
        worked_f: RootedPoly,
        worked_g: RootedPoly,
    ) -> None:
        """Test a certificate keeps its matrices and vectors bit for bit."""
        r = realize_weyl_converse(worked_f, worked_g, 1, 1)
        repo.save_realization("r.json", r)
        loaded = repo.load_certificate("r.json")
        assert isinstance(loaded, Realization)
        assert np.array_equal(loaded.A.entries, r.A.entries)
        assert np.array_equal(loaded.B.entries, r.B.entries)
        assert len(loaded.plus_vectors) == len(r.plus_vectors)
        for a, b in zip(loaded.minus_vectors, r.minus_vectors):
            assert np.array_equal(a, b)

    def test_bordered_round_trip(self, repo: CertificateRepository) -> None:
        """Test bordered certificates are recognised by their M key."""
        r = realize_bordered(make_poly([1.0]), make_poly([2.0, 0.5, -1.0]))
        repo.save_bordered("b.json", r)
        loaded = repo.load_certificate("b.json")
        assert isinstance(loaded, BorderedRealization)
        assert np.array_equal(loaded.M.entries, r.M.entries)

    def test_deterministic_bytes(
        self, repo: CertificateRepository, tmp_path: Path
    ) -> None:
        """Test equal inputs produce identical files."""
        r = realize_weyl_converse(make_poly([3, 1, -2]), make_poly([2, 0, -1]), 1, 1)
        repo.save_realization("one.json", r)
        repo.save_realization("two.json", r)
        assert (tmp_path / "one.json").read_bytes() == (
            tmp_path / "two.json"
        ).read_bytes()

    def test_pair_round_trip(self, repo: CertificateRepository) -> None:
        """Test generated pairs keep their metadata."""
        pair = PairModel(
            f=PolyModel(roots=[1.0]),
            g=PolyModel(roots=[2.0]),
            n=1,
            p=1,
            q=0,
            seed=5,
            min_gap=0.05,
        )
        repo.save_pair("nested/pair.json", pair)
        assert repo.load_pair("nested/pair.json") == pair

    def test_missing_file(self, repo: CertificateRepository) -> None:
        """Test an absent file is an input error."""
        with pytest.raises(InputValidationError):
            repo.load_poly("absent.json")

    def test_malformed_json(self, repo: CertificateRepository, tmp_path: Path) -> None:
        """Test unparsable documents are input errors."""
        (tmp_path / "bad.json").write_text("{roots: [1,")
        with pytest.raises(InputValidationError):
            repo.load_poly("bad.json")
        with pytest.raises(InputValidationError):
            repo.load_certificate("bad.json")

    def test_inconsistent_certificate(
        self, repo: CertificateRepository, tmp_path: Path
    ) -> None:
        """Test degree and order disagreement is an input error."""
        doc = {
            "f": {"roots": [1.0, 0.0]},
            "g": {"roots": [1.0]},
            "p": 0,
            "q": 0,
            "A": {"n": 1, "rows": [[1.0]]},
            "B": {"n": 1, "rows": [[1.0]]},
        }
        (tmp_path / "cert.json").write_text(json.dumps(doc))
        with pytest.raises(InputValidationError):
            repo.load_certificate("cert.json")
