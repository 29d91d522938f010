"""File-backed load/save of polynomials, pairs and certificates."""

import json
from collections.abc import Callable
from pathlib import Path
from typing import TypeVar

import structlog
from pydantic import BaseModel, ValidationError

from weyl_forge.core.exceptions import InputValidationError, WeylForgeError
from weyl_forge.polynomials.rooted import RootedPoly
from weyl_forge.realize.certificates import BorderedRealization, Realization
from weyl_forge.storage.models import (
    BorderedModel,
    PairModel,
    PolyModel,
    RealizationModel,
)

logger = structlog.get_logger()

ModelT = TypeVar("ModelT", bound=BaseModel)
T = TypeVar("T")


def dumps(model: BaseModel) -> str:
    """Deterministic JSON text for a model, with a trailing newline."""
    return model.model_dump_json(indent=2) + "\n"


class CertificateRepository:
    """Reads and writes the toolkit's JSON documents under a base directory."""

    def __init__(self, root: Path | None = None) -> None:
        self._root = root or Path.cwd()

    def _resolve(self, path: Path | str) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self._root / path

    def _read(self, path: Path | str, model: type[ModelT]) -> ModelT:
        target = self._resolve(path)
        try:
            text = target.read_text()
        except OSError as e:
            raise InputValidationError(
                f"Cannot read {target}", details={"path": str(target), "error": str(e)}
            ) from e
        try:
            return model.model_validate_json(text)
        except ValidationError as e:
            raise InputValidationError(
                f"Malformed document {target}",
                details={"path": str(target), "error": str(e)},
            ) from e

    def _write(self, path: Path | str, model: BaseModel) -> Path:
        target = self._resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(dumps(model))
        logger.debug("Wrote document", path=str(target), kind=type(model).__name__)
        return target

    def load_poly(self, path: Path | str) -> RootedPoly:
        return self._read(path, PolyModel).to_poly()

    def save_poly(self, path: Path | str, f: RootedPoly) -> Path:
        return self._write(path, PolyModel.from_poly(f))

    def load_pair(self, path: Path | str) -> PairModel:
        return self._read(path, PairModel)

    def save_pair(self, path: Path | str, pair: PairModel) -> Path:
        return self._write(path, pair)

    def load_realization(self, path: Path | str) -> Realization:
        return self._convert(self._read(path, RealizationModel).to_realization)

    def save_realization(self, path: Path | str, r: Realization) -> Path:
        return self._write(path, RealizationModel.from_realization(r))

    def load_bordered(self, path: Path | str) -> BorderedRealization:
        return self._convert(self._read(path, BorderedModel).to_bordered)

    def save_bordered(self, path: Path | str, r: BorderedRealization) -> Path:
        return self._write(path, BorderedModel.from_bordered(r))

    def load_certificate(self, path: Path | str) -> Realization | BorderedRealization:
        """Either certificate kind, told apart by the presence of "M"."""
        target = self._resolve(path)
        try:
            raw = json.loads(target.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise InputValidationError(
                f"Cannot read certificate {target}", details={"error": str(e)}
            ) from e
        if isinstance(raw, dict) and "M" in raw:
            return self.load_bordered(target)
        return self.load_realization(target)

    @staticmethod
    def _convert(build: Callable[[], T]) -> T:
        # Certificate constructors reject inconsistent orders and degrees.
        try:
            return build()
        except WeylForgeError as e:
            raise InputValidationError(e.message, details=e.details) from e
