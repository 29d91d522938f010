"""Pytest configuration and fixtures."""

import json
from collections.abc import Callable, Iterator
from pathlib import Path

import numpy as np
import pytest

from weyl_forge.core.config import DEFAULT_TOLERANCES, ToleranceProfile, get_settings
from weyl_forge.polynomials.rooted import RootedPoly, make_poly
from weyl_forge.storage.repository import CertificateRepository


@pytest.fixture(autouse=True)
def clear_settings_cache() -> Iterator[None]:
    """Drop cached settings so environment changes take effect per test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def tol() -> ToleranceProfile:
    """Default tolerance profile."""
    return DEFAULT_TOLERANCES


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for reproducible random instances."""
    return np.random.default_rng(20240611)


@pytest.fixture
def worked_f() -> RootedPoly:
    """f = (x - 1)(x + 1)."""
    return make_poly([1.0, -1.0])


@pytest.fixture
def worked_g() -> RootedPoly:
    """g = x(x - 2), interlaced by f at (1, 0)."""
    return make_poly([2.0, 0.0])


@pytest.fixture
def repo(tmp_path: Path) -> CertificateRepository:
    """Repository rooted in a temporary directory."""
    return CertificateRepository(tmp_path)


@pytest.fixture
def write_poly(tmp_path: Path) -> Callable[[str, list[float]], Path]:
    """Write a polynomial JSON file and return its path."""

    def _write(name: str, roots: list[float]) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps({"roots": roots}))
        return path

    return _write
